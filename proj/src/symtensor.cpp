#include "mroot/symtensor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mroot {

SymValueTensor::SymValueTensor(int n, int order)
    : n_(n), order_(order), v_(static_cast<std::size_t>(sym_size(n, order)), 0.0) {
    if (n < 1 || n > kMaxDim) throw OrderOutOfRange("tensor dimension out of range");
    if (order < 0 || order > kMaxOrder) throw OrderOutOfRange("tensor order out of range");
}

double SymValueTensor::at(const MultiIndex& idx) const {
    if (static_cast<int>(idx.size()) != order_)
        throw OrderOutOfRange("multi-index length does not match tensor order");
    return v_[static_cast<std::size_t>(sym_rank(n_, canonicalize(idx, n_)))];
}

double& SymValueTensor::at(const MultiIndex& idx) {
    if (static_cast<int>(idx.size()) != order_)
        throw OrderOutOfRange("multi-index length does not match tensor order");
    return v_[static_cast<std::size_t>(sym_rank(n_, canonicalize(idx, n_)))];
}

int SymValueTensor::rank2(int i, int j) const {
    if (i > j) std::swap(i, j);
    return sym_rank(n_, MultiIndex{i, j});
}

int SymValueTensor::rank3(int i, int j, int k) const {
    if (i > j) std::swap(i, j);
    if (j > k) std::swap(j, k);
    if (i > j) std::swap(i, j);
    return sym_rank(n_, MultiIndex{i, j, k});
}

SymValueTensor& SymValueTensor::operator+=(const SymValueTensor& other) {
    if (n_ != other.n_ || order_ != other.order_)
        throw OrderOutOfRange("tensor shape mismatch in addition");
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += other.v_[i];
    return *this;
}

SymValueTensor& SymValueTensor::operator*=(double s) {
    for (double& x : v_) x *= s;
    return *this;
}

double SymValueTensor::max_abs() const {
    double m = 0.0;
    for (double x : v_) m = std::max(m, std::abs(x));
    return m;
}

const PolyField& SymCoeffTensor::entry(const MultiIndex& idx) const {
    if (static_cast<int>(idx.size()) != m_)
        throw OrderOutOfRange("multi-index length does not match tensor order");
    auto it = entries_.find(canonicalize(idx, n_));
    return it == entries_.end() ? zero_ : it->second;
}

void SymCoeffTensor::set_entry(const MultiIndex& idx, PolyField f) {
    if (static_cast<int>(idx.size()) != m_)
        throw OrderOutOfRange("multi-index length does not match tensor order");
    entries_[canonicalize(idx, n_)] = std::move(f);
}

SymCoeffTensor SymCoeffTensor::scaled(double factor) const {
    SymCoeffTensor out(n_, m_);
    for (const auto& [idx, f] : entries_) out.set_entry(idx, f.scaled(factor));
    return out;
}

SymCoeffTensor build_from_representatives(
    int n, int m, const std::vector<std::pair<MultiIndex, PolyField>>& entries) {
    if (n < 2 || n > kMaxDim) throw OrderOutOfRange("dimension must lie in [2, 8]");
    if (m < 2 || m > kMaxOrder) throw OrderOutOfRange("degree must lie in [2, 6]");
    SymCoeffTensor t(n, m);
    for (const auto& [idx, f] : entries) {
        if (static_cast<int>(idx.size()) != m)
            throw IndexOutOfRange("representative multi-index has length " +
                                  std::to_string(idx.size()) + ", expected " + std::to_string(m));
        const MultiIndex key = canonicalize(idx, n);
        if (t.orbits().count(key))
            throw DuplicateOrbit("duplicate representative for one symmetry orbit");
        t.set_entry(key, f);
    }
    return t;
}

namespace {

double momentum_product(const MultiIndex& s, const Vec& p) {
    double r = 1.0;
    for (int v : s) r *= p[v - 1];
    return r;
}

} // namespace

SymValueTensor contract_momenta(const SymValueTensor& t, const Vec& p, int k) {
    if (k < 0 || k > t.order())
        throw ArityExceeded("cannot contract " + std::to_string(k) + " slots of an order-" +
                            std::to_string(t.order()) + " tensor");
    const int n = t.dim();
    SymValueTensor out(n, t.order() - k);
    for_each_canonical(n, t.order() - k, [&](const MultiIndex& free) {
        double sum = 0.0;
        for_each_canonical(n, k, [&](const MultiIndex& s) {
            MultiIndex full = free;
            full.insert(full.end(), s.begin(), s.end());
            std::sort(full.begin(), full.end());
            sum += static_cast<double>(permutation_count(s)) * t.at(full) * momentum_product(s, p);
        });
        out.at(free) = sum;
    });
    return out;
}

SymValueTensor contract_momenta(const SymCoeffTensor& t, const Vec& x, const Vec& p, int k) {
    if (k < 0 || k > t.order())
        throw ArityExceeded("cannot contract " + std::to_string(k) + " slots of an order-" +
                            std::to_string(t.order()) + " tensor");
    const int n = t.dim();
    const int r = t.order() - k;
    SymValueTensor out(n, r);
    for (const auto& [orbit, f] : t.orbits()) {
        const double value = f.eval(x);
        if (value == 0.0) continue;
        for (const auto& [freeIdx, comp] : sub_multisets(orbit, r)) {
            out.at(freeIdx) += value * static_cast<double>(permutation_count(comp)) *
                               momentum_product(comp, p);
        }
    }
    return out;
}

} // namespace mroot
