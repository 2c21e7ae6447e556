#ifndef MROOT_SYMTENSOR_HPP
#define MROOT_SYMTENSOR_HPP

#include <map>
#include <vector>

#include "mroot/multiindex.hpp"
#include "mroot/poly.hpp"

namespace mroot {

/// Dense fully symmetric tensor of real point values. Storage holds one
/// entry per canonical multi-index (C(n+r-1, r) of them); lookups with any
/// index ordering resolve to the same entry.
class SymValueTensor {
public:
    SymValueTensor() = default;
    SymValueTensor(int n, int order);

    int dim() const { return n_; }
    int order() const { return order_; }
    std::vector<double>& values() { return v_; }
    const std::vector<double>& values() const { return v_; }

    double at(const MultiIndex& idx) const;
    double& at(const MultiIndex& idx);
    // fast paths for low orders (indices 1-based, any order)
    double at2(int i, int j) const { return v_[static_cast<std::size_t>(rank2(i, j))]; }
    double at3(int i, int j, int k) const { return v_[static_cast<std::size_t>(rank3(i, j, k))]; }

    int rank2(int i, int j) const;
    int rank3(int i, int j, int k) const;

    SymValueTensor& operator+=(const SymValueTensor& other);
    SymValueTensor& operator*=(double s);

    double max_abs() const;

private:
    int n_ = 0;
    int order_ = 0;
    std::vector<double> v_;
};

/// Fully symmetric order-m coefficient tensor with sparse polynomial
/// entries, stored as one representative per symmetry orbit. The stored
/// value is the symmetric component itself, not the orbit sum.
class SymCoeffTensor {
public:
    SymCoeffTensor() = default;
    SymCoeffTensor(int n, int m) : n_(n), m_(m), zero_(n) {}

    int dim() const { return n_; }
    int order() const { return m_; }

    /// Entry for any ordering of idx; absent orbits read as the zero polynomial.
    const PolyField& entry(const MultiIndex& idx) const;
    void set_entry(const MultiIndex& idx, PolyField f);

    const std::map<MultiIndex, PolyField>& orbits() const { return entries_; }

    SymCoeffTensor scaled(double factor) const;

private:
    int n_ = 0;
    int m_ = 0;
    PolyField zero_;
    std::map<MultiIndex, PolyField> entries_;
};

/// Build a symmetric coefficient tensor from one (representative, value)
/// pair per orbit. Rejects duplicate orbits and malformed indices.
SymCoeffTensor build_from_representatives(
    int n, int m, const std::vector<std::pair<MultiIndex, PolyField>>& entries);

/// Contract k momentum slots of a value tensor: result has order-k slots.
/// k = order gives an order-0 (scalar) tensor.
SymValueTensor contract_momenta(const SymValueTensor& t, const Vec& p, int k);

/// Evaluate the coefficient tensor at x, then contract k momenta.
SymValueTensor contract_momenta(const SymCoeffTensor& t, const Vec& x, const Vec& p, int k);

} // namespace mroot

#endif
