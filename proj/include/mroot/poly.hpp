#ifndef MROOT_POLY_HPP
#define MROOT_POLY_HPP

#include <vector>

#include <Eigen/Dense>

#include "mroot/errors.hpp"

namespace mroot {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// One monomial c * x1^e1 * ... * xn^en.
struct Monomial {
    std::vector<int> exps; // length = dim, entries >= 0
    double coef = 0.0;
};

/// Sparse multivariate polynomial in the position variables.
///
/// Kept in a normal form: terms sorted lexicographically by exponent
/// vector, duplicates merged, zero coefficients pruned. Evaluation and
/// differentiation are exact up to floating round-off.
class PolyField {
public:
    PolyField() = default;
    explicit PolyField(int dim) : dim_(dim) {}
    PolyField(int dim, std::vector<Monomial> terms);

    static PolyField constant(int dim, double value);

    int dim() const { return dim_; }
    const std::vector<Monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    double eval(const Vec& x) const;
    /// Value and exact gradient in one pass.
    double eval_grad(const Vec& x, Vec& grad) const;

    /// Exact partial derivative d/dx_var (0-based var).
    PolyField derivative(int var) const;
    PolyField scaled(double factor) const;

    bool operator==(const PolyField& other) const;

private:
    void normalize();

    int dim_ = 0;
    std::vector<Monomial> terms_;
};

/// Convenience: value and exact gradient of f at x.
std::pair<double, Vec> poly_eval_grad(const PolyField& f, const Vec& x);

} // namespace mroot

#endif
