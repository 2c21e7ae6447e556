#ifndef MROOT_METRIC_HPP
#define MROOT_METRIC_HPP

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mroot/symtensor.hpp"

namespace mroot {

/// An m-th root metric: dimension, degree, symmetric polynomial coefficient
/// tensor, and an optional reference volume density sigma(x) (default 1).
class MetricSpec {
public:
    MetricSpec() = default;
    MetricSpec(int n, int m, SymCoeffTensor a,
               std::optional<PolyField> sigma = std::nullopt,
               std::string name = "");

    int dim() const { return n_; }
    int degree() const { return m_; }
    const SymCoeffTensor& coeffs() const { return a_; }
    const PolyField& sigma() const { return sigma_; }
    bool has_sigma() const { return hasSigma_; }
    const std::string& name() const { return name_; }

    /// Same metric with the coefficient tensor scaled by a constant factor.
    MetricSpec scaled(double factor) const;

    // compiled per-orbit data, internal to the evaluators
    struct Split {
        int freeRank;     // rank of the free sub-multiset at its order
        double weight;    // orderings of the contracted complement
        MultiIndex comp;  // contracted complement, canonical
    };
    struct Orbit {
        MultiIndex rep;
        PolyField f;
        std::vector<PolyField> grad;              // n first partials
        std::vector<PolyField> hess;              // canonical (s<=u) second partials
        std::vector<std::vector<Split>> splits;   // by free order r = 0..m
    };
    const std::vector<Orbit>& orbits() const { return orbits_; }

private:
    int n_ = 0;
    int m_ = 0;
    SymCoeffTensor a_;
    PolyField sigma_;
    bool hasSigma_ = false;
    std::string name_;
    std::vector<Orbit> orbits_;
};

/// A point of the punctured cotangent bundle.
struct EvalPoint {
    Vec x;
    Vec p;
};

/// Momentum contractions A_r of the coefficient tensor at (x, p) together
/// with their first and (optionally) second x-derivatives:
///   A_r^{i1..ir}      = a^{i1..ir j1..j_{m-r}}(x) p_{j1} ... p_{j_{m-r}}
/// The paper-normalized tensors are a_r = A_r / K^{m-r}.
struct ContractionTable {
    int n = 0;
    int m = 0;
    std::vector<SymValueTensor> A;                 // r = 0..m
    std::vector<std::vector<SymValueTensor>> dA;   // [s][r], r = 0..min(m,5)
    std::vector<std::vector<SymValueTensor>> d2A;  // [su-rank][r], r = 0..min(m,4)
    bool hasSecond = false;

    double A0() const { return A[0].values()[0]; }
    const SymValueTensor& dAr(int s, int r) const { return dA[static_cast<std::size_t>(s)][static_cast<std::size_t>(r)]; }
    const SymValueTensor& d2Ar(int s, int u, int r) const; // 0-based s, u
};

ContractionTable eval_contractions(const MetricSpec& spec, const Vec& x, const Vec& p,
                                   bool withSecond = false);

/// All metric-level tensors at one admissible point.
struct MetricBundle {
    double K = 0.0;
    std::vector<SymValueTensor> aT; // aT[r], r = 1..min(m-1,4); aT[0] unused
    Vec l;        // normalized supporting element, l^i = a^i
    Mat gUp;      // fundamental tensor g^{ij}
    Mat gDown;    // inverse g_{ij}
    Mat h;        // angular tensor h^{ij}
    SymValueTensor C; // Cartan torsion C^{ijk}
    Vec I;        // mean Cartan torsion I^i = g_{jk} C^{ijk}
    bool gPositiveDefinite = false;
    double condA = 0.0; // 1-norm condition estimate of a^{ij}
};

/// Per-point evaluation context: contraction table, fundamental value and
/// the single factorization of A2 shared by every downstream linear solve.
struct EvalContext {
    const MetricSpec* spec = nullptr;
    Vec x, p;
    ContractionTable tab;
    double K = 0.0;
    Mat A2;
    Eigen::PartialPivLU<Mat> lu;
    double condA2 = 0.0;

    SymValueTensor aTensor(int r) const; // A_r / K^{m-r}
};

EvalContext make_context(const MetricSpec& spec, const EvalPoint& pt, bool withSecond = false);

double fundamental(const MetricSpec& spec, const EvalPoint& pt);
bool is_admissible(const MetricSpec& spec, const Vec& x, const Vec& p);

SymValueTensor a_tensor(const MetricSpec& spec, const EvalPoint& pt, int r);
std::pair<Mat, Mat> metric_pair(const MetricSpec& spec, const EvalPoint& pt);
Mat angular(const MetricSpec& spec, const EvalPoint& pt);
SymValueTensor cartan_torsion(const MetricSpec& spec, const EvalPoint& pt);
Vec mean_cartan(const MetricSpec& spec, const EvalPoint& pt);

MetricBundle make_bundle(const MetricSpec& spec, const EvalPoint& pt);
MetricBundle make_bundle(const EvalContext& ctx);

/// Closed forms of the vertical derivatives of a^{ij}, a^i and a^i a^j.
struct VerticalDerivs {
    std::vector<Mat> dA2; // [k](i,j) = d a^{ij} / d p_k
    Mat dA1;              // (i,k)    = d a^i / d p_k
    std::vector<Mat> dLL; // [k](i,j) = d (a^i a^j) / d p_k
};
VerticalDerivs vertical_derivatives(const MetricSpec& spec, const EvalPoint& pt);

} // namespace mroot

#endif
