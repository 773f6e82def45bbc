#ifndef TREELAB_POLY_HPP
#define TREELAB_POLY_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace treelab {

using Integer = mpz_class;
using Rational = mpq_class;

// Dense polynomial with arbitrary-precision integer coefficients, index k =
// coefficient of x^k. Normalized: no trailing zeros; the zero polynomial is
// the empty coefficient vector.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);
    static IntPoly constant(Integer c);
    static IntPoly one() { return constant(1); }

    const std::vector<Integer>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Integer coeff(int k) const {
        return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Integer(0);
    }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    // Multiply by x^k.
    IntPoly shifted(int k) const;

    Rational eval(const Rational& x) const;
    Integer eval_int(const Integer& x) const;

    std::string to_string() const;

private:
    std::vector<Integer> c_;
    void normalize();
};

// Parse "p/q" or "p" into an exact rational (canonicalized).
Rational parse_rational(const std::string& s);
std::string rational_to_string(const Rational& r);

}  // namespace treelab

#endif
