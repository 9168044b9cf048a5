#include "uqsl/homological.hpp"

#include <stdexcept>

namespace uqsl {

namespace {

const CycNum kOne(1, 1L);

/// Each matrix flattened (row-major) into one column.
Matrix flatten(const std::vector<Matrix>& ms, int rows, int cols) {
    Matrix out(rows * cols, static_cast<int>(ms.size()));
    for (std::size_t k = 0; k < ms.size(); ++k)
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) out(i * cols + j, static_cast<int>(k)) = ms[k](i, j);
    return out;
}

Matrix combine(const std::vector<Matrix>& basis, const Matrix& coeffs, int col, int rows, int cols) {
    Matrix out(rows, cols);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const CycNum& c = coeffs(static_cast<int>(k), col);
        if (!c.is_zero()) out = out + basis[k].scaled(c);
    }
    return out;
}

/// Some module map f : x -> q with g f = target.
ModMap lift(const QMod& x, const QMod& q, const ModMap& g, const ModMap& target) {
    const auto H = hom_space(x, q);
    std::vector<Matrix> images;
    for (const auto& h : H) images.push_back(g * h);
    const Matrix sys = flatten(images, target.rows(), target.cols());
    const Matrix rhs = flatten({target}, target.rows(), target.cols());
    const auto c = solve(sys, rhs);
    if (!c) throw std::runtime_error("lift through a projective failed");
    return combine(H, *c, 0, q.dim(), x.dim());
}

struct ProjType {
    ModuleLabel label;
    QMod module;
    int top;  ///< index of the generating highest-weight vector
};

std::vector<ProjType> projective_types(int p) {
    std::vector<ProjType> out;
    for (int a : {1, -1})
        for (int s = 1; s <= p; ++s) {
            if (s < p)
                out.push_back({ModuleLabel{Family::P, a, s}, build_P(p, a, s), s});
            else
                out.push_back({ModuleLabel{Family::X, a, p}, irreducible(p, a, p), 0});
        }
    return out;
}

QMod irreducible_of(int p, const ModuleLabel& l) { return irreducible(p, l.sign, l.s); }

}  // namespace

ProjectiveCover projective_cover(const QMod& m) {
    ProjectiveCover out;
    const int p = m.p();
    const Subspace rad = radical(m);
    std::vector<Matrix> spanned{rad.basis};
    int current = rad.dim();
    std::vector<QMod> parts;
    std::vector<Matrix> maps;
    for (const auto& pt : projective_types(p)) {
        for (const auto& h : hom_space(pt.module, m)) {
            if (current == m.dim()) break;
            // a new top factor iff the generator escapes rad + earlier images
            spanned.push_back(Matrix::column(h.col(pt.top)));
            const bool fresh = rank(hstack(spanned, m.dim())) > current;
            spanned.pop_back();
            if (!fresh) continue;
            spanned.push_back(h);
            current = rank(hstack(spanned, m.dim()));
            parts.push_back(pt.module);
            maps.push_back(h);
            out.summands.push_back(pt.label);
        }
    }
    if (current != m.dim()) throw ClassificationError("projective cover does not reach the top");
    if (parts.empty()) {
        out.P = QMod(p, {}, Matrix(0, 0), Matrix(0, 0));
        out.cover = Matrix(m.dim(), 0);
        return out;
    }
    out.P = direct_sum(parts);
    out.cover = hstack(maps, m.dim());
    return out;
}

Resolution minimal_resolution(const QMod& x, int length) {
    Resolution res;
    res.resolved = x;
    ProjectiveCover c = projective_cover(x);
    res.terms.push_back(c.P);
    res.summands.push_back(c.summands);
    res.augmentation = c.cover;
    ModMap prev = c.cover;
    for (int k = 1; k <= length; ++k) {
        const QMod& top = res.terms.back();
        const Subspace ker = kernel(prev, top);
        if (ker.dim() == 0) {
            res.terminated = true;
            break;
        }
        const QMod km = restrict_module(top, ker);
        c = projective_cover(km);
        const ModMap d = ker.basis * c.cover;
        res.boundaries.push_back(d);
        res.terms.push_back(c.P);
        res.summands.push_back(c.summands);
        prev = d;
    }
    return res;
}

bool verify_resolution(const Resolution& r, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (!is_intertwiner(r.augmentation, r.terms[0], r.resolved)) return fail("augmentation is not a module map");
    if (rank(r.augmentation) != r.resolved.dim()) return fail("augmentation is not surjective");
    for (std::size_t k = 0; k < r.boundaries.size(); ++k) {
        const ModMap& d = r.boundaries[k];
        if (!is_intertwiner(d, r.terms[k + 1], r.terms[k]))
            return fail("boundary " + std::to_string(k + 1) + " is not a module map");
        const ModMap& out = k == 0 ? r.augmentation : r.boundaries[k - 1];
        if (!(out * d).is_zero()) return fail("boundary composite " + std::to_string(k + 1) + " is nonzero");
        if (rank(d) != r.terms[k].dim() - rank(out)) return fail("not exact at term " + std::to_string(k));
    }
    if (r.terminated) {
        const ModMap& last = r.boundaries.empty() ? r.augmentation : r.boundaries.back();
        if (rank(last) != r.terms.back().dim()) return fail("last map of a finite resolution is not injective");
    }
    return true;
}

// ---------------------------------------------------------------------------

ExtCalculator::ExtCalculator(int p) : p_(p) {
    if (p < 2) throw std::invalid_argument("p must be at least 2");
}

const Resolution& ExtCalculator::resolution(int a, int s, int length) {
    const auto key = std::make_tuple(a, s);
    auto it = cache_.find(key);
    if (it != cache_.end() &&
        (it->second.terminated || static_cast<int>(it->second.terms.size()) > length))
        return it->second;
    Resolution r = minimal_resolution(irreducible(p_, a, s), length);
    return cache_[key] = std::move(r);
}

int ExtCalculator::ext_dim(int a, int s, int b, int t, int n) {
    if (n < 0) throw std::invalid_argument("negative Ext degree");
    const Resolution& r = resolution(a, s, n + 1);
    if (n >= static_cast<int>(r.terms.size())) return 0;
    const QMod target = irreducible(p_, b, t);
    const QMod& pn = r.terms[n];
    const auto H = hom_space(pn, target);
    if (H.empty()) return 0;
    int cocycles = static_cast<int>(H.size());
    if (n < static_cast<int>(r.boundaries.size())) {
        const ModMap& d = r.boundaries[n];
        std::vector<Matrix> images;
        for (const auto& h : H) images.push_back(h * d);
        cocycles = static_cast<int>(H.size()) - rank(flatten(images, target.dim(), d.cols()));
    }
    int coboundaries = 0;
    if (n >= 1) {
        const ModMap& d = r.boundaries[n - 1];
        std::vector<Matrix> images;
        for (const auto& h : hom_space(r.terms[n - 1], target)) images.push_back(h * d);
        coboundaries = images.empty() ? 0 : rank(flatten(images, target.dim(), pn.dim()));
    }
    return cocycles - coboundaries;
}

ExtClass ExtCalculator::class_from_ses(const ModuleLabel& source, const ModuleLabel& target, const QMod& middle,
                                       const ModMap& iota, const ModMap& pi) {
    const QMod S = irreducible_of(p_, source), T = irreducible_of(p_, target);
    if (!is_intertwiner(iota, T, middle) || !is_intertwiner(pi, middle, S))
        throw std::invalid_argument("class_from_ses: maps are not module maps");
    if (!(pi * iota).is_zero() || rank(iota) != T.dim() || rank(pi) != S.dim() ||
        middle.dim() != S.dim() + T.dim())
        throw std::invalid_argument("class_from_ses: sequence is not short exact");
    const Resolution& r = resolution(source.sign, source.s, 2);
    if (r.boundaries.empty()) throw std::invalid_argument("class_from_ses: source is projective");
    const ModMap lambda = lift(r.terms[0], middle, pi, r.augmentation);
    const auto c = solve(iota, lambda * r.boundaries[0]);
    if (!c) throw std::runtime_error("class_from_ses: lifted boundary leaves the submodule");
    return ExtClass{p_, 1, source, target, *c};
}

XBasis ExtCalculator::ext_basis_x(int a, int s) {
    const int t = p_ - s;
    auto make = [&](int sign, int idx, const CP1& z) {
        const QMod mid = build_O1(p_, sign, idx, z);
        const int other = p_ - idx;
        ModMap iota(p_, other), pi(idx, p_);
        for (int k = 0; k < other; ++k) iota(idx + k, k) = kOne;
        for (int k = 0; k < idx; ++k) pi(k, k) = kOne;
        return class_from_ses(ModuleLabel{Family::X, sign, idx}, ModuleLabel{Family::X, -sign, other}, mid, iota, pi);
    };
    const CP1 verma = CP1::make(kOne, CycNum()), coverma = CP1::infinity();
    return XBasis{make(a, s, verma), make(a, s, coverma), make(-a, t, verma), make(-a, t, coverma)};
}

ExtClass ExtCalculator::yoneda(const ExtClass& u, const ExtClass& v) {
    if (u.p != p_ || v.p != p_) throw std::invalid_argument("yoneda: classes for a different p");
    if (!(v.target == u.source))
        throw std::invalid_argument("yoneda: not composable (" + v.target.to_string() + " is not " +
                                    u.source.to_string() + ")");
    const int m = v.degree, k = u.degree;
    const Resolution ra = resolution(v.source.sign, v.source.s, m + k);
    if (static_cast<int>(ra.terms.size()) <= m + k) throw std::invalid_argument("yoneda: source resolution ended");
    const Resolution rb = resolution(u.source.sign, u.source.s, k);
    ModMap f = lift(ra.terms[m], rb.terms[0], rb.augmentation, v.cocycle);
    for (int j = 1; j <= k; ++j)
        f = lift(ra.terms[m + j], rb.terms[j], rb.boundaries[j - 1], f * ra.boundaries[m + j - 1]);
    return ExtClass{p_, m + k, v.source, u.target, u.cocycle * f};
}

ExtClass ExtCalculator::product(const ExtClass& u, const ExtClass& v) {
    if (v.target == u.source) return yoneda(u, v);
    const int n = u.degree + v.degree;
    const Resolution& ra = resolution(v.source.sign, v.source.s, n);
    const int cols = n < static_cast<int>(ra.terms.size()) ? ra.terms[n].dim() : 0;
    return ExtClass{p_, n, v.source, u.target, Matrix(u.target.s, cols)};
}

ExtClass ExtCalculator::add(const ExtClass& u, const ExtClass& v) const {
    if (u.degree != v.degree || !(u.source == v.source) || !(u.target == v.target))
        throw std::invalid_argument("adding classes of different Ext groups");
    return ExtClass{p_, u.degree, u.source, u.target, u.cocycle + v.cocycle};
}

ExtClass ExtCalculator::scaled(const ExtClass& u, const CycNum& c) const {
    return ExtClass{p_, u.degree, u.source, u.target, u.cocycle.scaled(c)};
}

bool ExtCalculator::is_zero(const ExtClass& c) {
    if (c.cocycle.is_zero()) return true;
    if (c.degree == 0) return false;
    const Resolution& r = resolution(c.source.sign, c.source.s, c.degree);
    const QMod T = irreducible_of(p_, c.target);
    const ModMap& d = r.boundaries[c.degree - 1];
    std::vector<Matrix> images;
    for (const auto& h : hom_space(r.terms[c.degree - 1], T)) images.push_back(h * d);
    if (images.empty()) return false;
    return solve(flatten(images, T.dim(), d.cols()), flatten({c.cocycle}, T.dim(), d.cols())).has_value();
}

}  // namespace uqsl
