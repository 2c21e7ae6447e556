#include "mroot/poly.hpp"

#include <algorithm>
#include <cmath>

namespace mroot {

PolyField::PolyField(int dim, std::vector<Monomial> terms)
    : dim_(dim), terms_(std::move(terms)) {
    for (const auto& t : terms_) {
        if (static_cast<int>(t.exps.size()) != dim_)
            throw ParseError("monomial exponent vector length does not match dimension");
        for (int e : t.exps)
            if (e < 0) throw ParseError("negative exponent in polynomial");
    }
    normalize();
}

PolyField PolyField::constant(int dim, double value) {
    Monomial m;
    m.exps.assign(static_cast<std::size_t>(dim), 0);
    m.coef = value;
    return PolyField(dim, {m});
}

void PolyField::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Monomial& a, const Monomial& b) { return a.exps < b.exps; });
    std::vector<Monomial> merged;
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().exps == t.exps)
            merged.back().coef += t.coef;
        else
            merged.push_back(std::move(t));
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const Monomial& t) { return t.coef == 0.0; }),
                 merged.end());
    terms_ = std::move(merged);
}

namespace {

double pow_int(double x, int e) {
    double r = 1.0;
    for (int k = 0; k < e; ++k) r *= x;
    return r;
}

} // namespace

double PolyField::eval(const Vec& x) const {
    double sum = 0.0;
    for (const auto& t : terms_) {
        double v = t.coef;
        for (int i = 0; i < dim_; ++i)
            if (t.exps[static_cast<std::size_t>(i)] > 0)
                v *= pow_int(x[i], t.exps[static_cast<std::size_t>(i)]);
        sum += v;
    }
    return sum;
}

double PolyField::eval_grad(const Vec& x, Vec& grad) const {
    grad = Vec::Zero(dim_);
    double sum = 0.0;
    for (const auto& t : terms_) {
        double v = t.coef;
        for (int i = 0; i < dim_; ++i)
            if (t.exps[static_cast<std::size_t>(i)] > 0)
                v *= pow_int(x[i], t.exps[static_cast<std::size_t>(i)]);
        sum += v;
        for (int i = 0; i < dim_; ++i) {
            const int e = t.exps[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            double d = t.coef * e;
            for (int j = 0; j < dim_; ++j) {
                int ej = t.exps[static_cast<std::size_t>(j)];
                if (j == i) ej -= 1;
                if (ej > 0) d *= pow_int(x[j], ej);
            }
            grad[i] += d;
        }
    }
    return sum;
}

PolyField PolyField::derivative(int var) const {
    if (var < 0 || var >= dim_) throw IndexOutOfRange("derivative variable out of range");
    std::vector<Monomial> out;
    for (const auto& t : terms_) {
        const int e = t.exps[static_cast<std::size_t>(var)];
        if (e == 0) continue;
        Monomial d = t;
        d.coef *= e;
        d.exps[static_cast<std::size_t>(var)] = e - 1;
        out.push_back(std::move(d));
    }
    return PolyField(dim_, std::move(out));
}

PolyField PolyField::scaled(double factor) const {
    std::vector<Monomial> out = terms_;
    for (auto& t : out) t.coef *= factor;
    return PolyField(dim_, std::move(out));
}

bool PolyField::operator==(const PolyField& other) const {
    if (dim_ != other.dim_ || terms_.size() != other.terms_.size()) return false;
    for (std::size_t k = 0; k < terms_.size(); ++k)
        if (terms_[k].exps != other.terms_[k].exps || terms_[k].coef != other.terms_[k].coef)
            return false;
    return true;
}

std::pair<double, Vec> poly_eval_grad(const PolyField& f, const Vec& x) {
    Vec g;
    double v = f.eval_grad(x, g);
    return {v, g};
}

} // namespace mroot
