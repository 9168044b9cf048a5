#include "uqsl/algebra.hpp"

#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "uqsl/matrix.hpp"

namespace uqsl {

namespace {

void add_term(Terms& t, int idx, const CycNum& c) {
    if (c.is_zero()) return;
    auto it = t.find(idx);
    if (it == t.end()) {
        t.emplace(idx, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
}

int mod(long a, int n) {
    long r = a % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace

// ---------------------------------------------------------------------------
// PBWAlgebra

PBWAlgebra::PBWAlgebra(int p, int n, int d) : p_(p), n_(n), d_(d) {
    if (p < 2) throw std::invalid_argument("p must be at least 2");
    // Right multiplication by E of a normal-ordered element:
    // E^i F^j g^l E = zeta^{2l} E^i (F^j E) g^l and
    // F^j E = E F^j - [j] F^{j-1} (q^{1-j} K - q^{j-1} K^-1)/(q - q^-1).
    const CycNum inv_diff = (q() - q().inverse()).inverse();
    auto times_E = [&](const Terms& x) {
        Terms out;
        for (const auto& [idx, c] : x) {
            const auto [i, j, l] = decode(idx);
            const CycNum cz = c * zeta(2L * l);
            if (i + 1 < p_) add_term(out, index(i + 1, j, l), cz);
            if (j > 0) {
                const CycNum f = cz * qint(j) * inv_diff;
                add_term(out, index(i, j - 1, mod(l + d_, n_)), -(f * qpow(1 - j)));
                add_term(out, index(i, j - 1, mod(l - d_, n_)), f * qpow(j - 1));
            }
        }
        return out;
    };
    fe_.assign(p_, std::vector<Terms>(p_));
    for (int b = 0; b < p_; ++b) {
        fe_[b][0] = Terms{{index(0, b, 0), CycNum(n_, 1L)}};
        for (int e = 1; e < p_; ++e) fe_[b][e] = times_E(fe_[b][e - 1]);
    }
}

const PBWAlgebra& PBWAlgebra::restricted(int p) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<PBWAlgebra>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[p];
    if (!slot) slot.reset(new PBWAlgebra(p, 2 * p, 1));
    return *slot;
}

const PBWAlgebra& PBWAlgebra::extended(int p) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<PBWAlgebra>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[p];
    if (!slot) slot.reset(new PBWAlgebra(p, 4 * p, 2));
    return *slot;
}

CycNum PBWAlgebra::qint(long n) const {
    CycNum r(n_);
    const long m = n < 0 ? -n : n;
    for (long k = 0; k < m; ++k) r += qpow(m - 1 - 2 * k);
    return n < 0 ? -r : r;
}

void PBWAlgebra::mul_monomials(int a, int b, const CycNum& c, Terms& out) const {
    const auto [i1, j1, l1] = decode(a);
    const auto [i2, j2, l2] = decode(b);
    const CycNum c0 = c * zeta(2L * l1 * (i2 - j2));
    for (const auto& [idx, t] : fe_[j1][i2]) {
        const auto [i, j, l] = decode(idx);
        if (i1 + i >= p_ || j + j2 >= p_) continue;
        add_term(out, index(i1 + i, j + j2, (l + l1 + l2) % n_), c0 * t * zeta(-2L * l * j2));
    }
}

AlgElem PBWAlgebra::basis(int idx) const { return AlgElem(*this, Terms{{idx, CycNum(n_, 1L)}}); }
AlgElem PBWAlgebra::scalar(const CycNum& c) const {
    if (c.is_zero()) return AlgElem(*this);
    return AlgElem(*this, Terms{{index(0, 0, 0), c}});
}
AlgElem PBWAlgebra::one() const { return basis(index(0, 0, 0)); }
AlgElem PBWAlgebra::E() const { return basis(index(1 % p_, 0, 0)); }
AlgElem PBWAlgebra::F() const { return basis(index(0, 1 % p_, 0)); }
AlgElem PBWAlgebra::K() const { return basis(index(0, 0, d_ % n_)); }
AlgElem PBWAlgebra::K_inv() const { return basis(index(0, 0, n_ - d_)); }
AlgElem PBWAlgebra::g() const { return basis(index(0, 0, 1)); }

// ---------------------------------------------------------------------------
// AlgElem

AlgElem::AlgElem(const PBWAlgebra& alg, Terms t) : alg_(&alg) {
    for (auto& [k, v] : t)
        if (!v.is_zero()) t_.emplace(k, std::move(v));
}

CycNum AlgElem::coeff(int idx) const {
    auto it = t_.find(idx);
    return it == t_.end() ? CycNum() : it->second;
}

void AlgElem::check(const AlgElem& b) const {
    if (alg_ != b.alg_) throw std::invalid_argument("algebra elements from different algebras");
}

void AlgElem::add(int idx, const CycNum& c) { add_term(t_, idx, c); }

AlgElem AlgElem::operator+(const AlgElem& b) const {
    check(b);
    AlgElem r(*this);
    for (const auto& [k, v] : b.t_) r.add(k, v);
    return r;
}

AlgElem AlgElem::operator-(const AlgElem& b) const {
    check(b);
    AlgElem r(*this);
    for (const auto& [k, v] : b.t_) r.add(k, -v);
    return r;
}

AlgElem AlgElem::operator-() const {
    AlgElem r(*this);
    for (auto& [k, v] : r.t_) v = -v;
    return r;
}

AlgElem AlgElem::operator*(const AlgElem& b) const {
    check(b);
    AlgElem r(*alg_);
    for (const auto& [ka, va] : t_)
        for (const auto& [kb, vb] : b.t_) alg_->mul_monomials(ka, kb, va * vb, r.t_);
    return r;
}

AlgElem AlgElem::scaled(const CycNum& c) const {
    if (c.is_zero()) return AlgElem(*alg_);
    AlgElem r(*this);
    for (auto& [k, v] : r.t_) v = v * c;
    return r;
}

AlgElem AlgElem::pow(int e) const {
    AlgElem acc = alg_->one();
    for (int i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

std::string AlgElem::to_string() const {
    if (t_.empty()) return "0";
    const char g = alg_->is_extended() ? 'k' : 'K';
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : t_) {
        const auto [i, j, l] = alg_->decode(idx);
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        if (i) os << "*E^" << i;
        if (j) os << "*F^" << j;
        if (l) os << "*" << g << "^" << l;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// TensorElem

TensorElem TensorElem::pure(const std::vector<AlgElem>& factors) {
    if (factors.empty()) throw std::invalid_argument("empty tensor");
    TensorElem r(factors[0].algebra(), static_cast<int>(factors.size()));
    std::vector<std::pair<std::uint64_t, CycNum>> acc{{0, CycNum(1, 1L)}};
    const std::uint64_t dim = r.alg_->dim();
    for (const auto& f : factors) {
        std::vector<std::pair<std::uint64_t, CycNum>> next;
        for (const auto& [k, c] : acc)
            for (const auto& [idx, v] : f.terms()) next.emplace_back(k * dim + idx, c * v);
        acc = std::move(next);
    }
    for (const auto& [k, c] : acc) r.add(k, c);
    return r;
}

std::uint64_t TensorElem::encode(const std::vector<int>& idx) const {
    std::uint64_t k = 0;
    for (int i : idx) k = k * alg_->dim() + static_cast<std::uint64_t>(i);
    return k;
}

std::vector<int> TensorElem::decode(std::uint64_t key) const {
    std::vector<int> idx(arity_);
    const std::uint64_t dim = alg_->dim();
    for (int s = arity_ - 1; s >= 0; --s) {
        idx[s] = static_cast<int>(key % dim);
        key /= dim;
    }
    return idx;
}

void TensorElem::add(std::uint64_t key, const CycNum& c) {
    if (c.is_zero()) return;
    auto it = t_.find(key);
    if (it == t_.end()) {
        t_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

TensorElem TensorElem::operator+(const TensorElem& b) const {
    TensorElem r(*this);
    for (const auto& [k, v] : b.t_) r.add(k, v);
    return r;
}

TensorElem TensorElem::operator-(const TensorElem& b) const {
    TensorElem r(*this);
    for (const auto& [k, v] : b.t_) r.add(k, -v);
    return r;
}

TensorElem TensorElem::scaled(const CycNum& c) const {
    TensorElem r(*alg_, arity_);
    for (const auto& [k, v] : t_) r.add(k, v * c);
    return r;
}

TensorElem TensorElem::operator*(const TensorElem& b) const {
    if (alg_ != b.alg_ || arity_ != b.arity_) throw std::invalid_argument("tensor shape mismatch");
    TensorElem r(*alg_, arity_);
    const std::uint64_t dim = alg_->dim();
    std::vector<Terms> slot(arity_);
    for (const auto& [ka, va] : t_) {
        const auto ia = decode(ka);
        for (const auto& [kb, vb] : b.t_) {
            const auto ib = decode(kb);
            bool zero = false;
            for (int s = 0; s < arity_ && !zero; ++s) {
                slot[s].clear();
                alg_->mul_monomials(ia[s], ib[s], CycNum(1, 1L), slot[s]);
                zero = slot[s].empty();
            }
            if (zero) continue;
            std::vector<std::pair<std::uint64_t, CycNum>> acc{{0, va * vb}};
            for (int s = 0; s < arity_; ++s) {
                std::vector<std::pair<std::uint64_t, CycNum>> next;
                next.reserve(acc.size() * slot[s].size());
                for (const auto& [k, c] : acc)
                    for (const auto& [idx, v] : slot[s]) next.emplace_back(k * dim + idx, c * v);
                acc = std::move(next);
            }
            for (const auto& [k, c] : acc) r.add(k, c);
        }
    }
    return r;
}

bool TensorElem::operator==(const TensorElem& b) const {
    if (t_.size() != b.t_.size()) return false;
    for (const auto& [k, v] : t_) {
        auto it = b.t_.find(k);
        if (it == b.t_.end() || it->second != v) return false;
    }
    return true;
}

TensorElem TensorElem::permuted(const std::vector<int>& perm) const {
    TensorElem r(*alg_, arity_);
    std::vector<int> out(arity_);
    for (const auto& [k, v] : t_) {
        const auto idx = decode(k);
        for (int s = 0; s < arity_; ++s) out[s] = idx[perm[s]];
        r.add(r.encode(out), v);
    }
    return r;
}

TensorElem TensorElem::with_unit(int slot) const {
    TensorElem r(*alg_, arity_ + 1);
    const int unit = alg_->index(0, 0, 0);
    for (const auto& [k, v] : t_) {
        auto idx = decode(k);
        idx.insert(idx.begin() + slot, unit);
        r.add(r.encode(idx), v);
    }
    return r;
}

AlgElem TensorElem::multiply_out() const {
    AlgElem r(*alg_);
    for (const auto& [k, v] : t_) {
        const auto idx = decode(k);
        AlgElem prod = alg_->basis(idx[0]).scaled(v);
        for (int s = 1; s < arity_; ++s) prod = prod * alg_->basis(idx[s]);
        r = r + prod;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Hopf structure

HopfStructure HopfStructure::standard(const PBWAlgebra& alg) {
    HopfStructure h;
    const AlgElem one = alg.one(), E = alg.E(), F = alg.F(), K = alg.K(), Ki = alg.K_inv(), g = alg.g();
    h.delta_E = TensorElem::pure({one, E}) + TensorElem::pure({E, K});
    h.delta_F = TensorElem::pure({Ki, F}) + TensorElem::pure({F, one});
    h.delta_g = TensorElem::pure({g, g});
    h.eps_E = CycNum();
    h.eps_F = CycNum();
    h.eps_g = CycNum(1, 1L);
    h.S_E = -(E * Ki);
    h.S_F = -(K * F);
    h.S_g = g.pow(alg.cartan_order() - 1);
    return h;
}

HopfMaps::HopfMaps(const PBWAlgebra& alg, HopfStructure h) : alg_(&alg), h_(std::move(h)) {
    const int p = alg.p(), n = alg.cartan_order();
    // powers of the generator images
    std::vector<TensorElem> dE{TensorElem::pure({alg.one(), alg.one()})}, dF = dE, dg = dE;
    std::vector<AlgElem> sE{alg.one()}, sF = sE, sg = sE;
    std::vector<CycNum> eE{CycNum(1, 1L)}, eF = eE, eg = eE;
    for (int k = 1; k < std::max(p, n); ++k) {
        if (k < p) {
            dE.push_back(dE.back() * h_.delta_E);
            dF.push_back(dF.back() * h_.delta_F);
            sE.push_back(sE.back() * h_.S_E);
            sF.push_back(sF.back() * h_.S_F);
            eE.push_back(eE.back() * h_.eps_E);
            eF.push_back(eF.back() * h_.eps_F);
        }
        if (k < n) {
            dg.push_back(dg.back() * h_.delta_g);
            sg.push_back(sg.back() * h_.S_g);
            eg.push_back(eg.back() * h_.eps_g);
        }
    }
    delta_.resize(alg.dim());
    eps_.resize(alg.dim());
    s_.resize(alg.dim());
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            const TensorElem dij = dE[i] * dF[j];
            const AlgElem sij = sF[j] * sE[i];
            for (int l = 0; l < n; ++l) {
                const int idx = alg.index(i, j, l);
                delta_[idx] = dij * dg[l];
                eps_[idx] = eE[i] * eF[j] * eg[l];
                s_[idx] = sg[l] * sij;
            }
        }
}

TensorElem HopfMaps::coproduct(const AlgElem& a) const {
    TensorElem r(*alg_, 2);
    for (const auto& [idx, c] : a.terms())
        for (const auto& [k, v] : delta_[idx].terms()) r.add(k, c * v);
    return r;
}

TensorElem HopfMaps::coproduct_left(const TensorElem& t) const {
    TensorElem r(*alg_, t.arity() + 1);
    const std::uint64_t dim = alg_->dim();
    for (const auto& [k, c] : t.terms()) {
        const auto idx = t.decode(k);
        std::uint64_t tail = 0;
        for (int s = 1; s < t.arity(); ++s) tail = tail * dim + idx[s];
        std::uint64_t scale = 1;
        for (int s = 1; s < t.arity(); ++s) scale *= dim;
        for (const auto& [kd, v] : delta_[idx[0]].terms()) r.add(kd * scale + tail, c * v);
    }
    return r;
}

TensorElem HopfMaps::coproduct_right(const TensorElem& t) const {
    TensorElem r(*alg_, t.arity() + 1);
    const std::uint64_t dim = alg_->dim();
    for (const auto& [k, c] : t.terms()) {
        const auto idx = t.decode(k);
        std::uint64_t head = 0;
        for (int s = 0; s + 1 < t.arity(); ++s) head = head * dim + idx[s];
        for (const auto& [kd, v] : delta_[idx.back()].terms()) r.add(head * dim * dim + kd, c * v);
    }
    return r;
}

CycNum HopfMaps::counit(const AlgElem& a) const {
    CycNum r;
    for (const auto& [idx, c] : a.terms())
        if (!eps_[idx].is_zero()) r += c * eps_[idx];
    return r;
}

AlgElem HopfMaps::antipode(const AlgElem& a) const {
    AlgElem r(*alg_);
    for (const auto& [idx, c] : a.terms()) r = r + s_[idx].scaled(c);
    return r;
}

const HopfMaps& standard_hopf(const PBWAlgebra& alg) {
    static std::mutex mu;
    static std::map<const PBWAlgebra*, std::unique_ptr<HopfMaps>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[&alg];
    if (!slot) slot = std::make_unique<HopfMaps>(alg, HopfStructure::standard(alg));
    return *slot;
}

TensorElem coproduct(const AlgElem& a) { return standard_hopf(a.algebra()).coproduct(a); }
CycNum counit(const AlgElem& a) { return standard_hopf(a.algebra()).counit(a); }
AlgElem antipode(const AlgElem& a) { return standard_hopf(a.algebra()).antipode(a); }

bool HopfReport::all_ok() const {
    for (const auto& a : axioms)
        if (!a.ok) return false;
    return true;
}

HopfReport verify_hopf(const PBWAlgebra& alg, const HopfStructure& h) {
    const HopfMaps maps(alg, h);
    const int dim = alg.dim();
    HopfReport rep;
    auto fail_at = [&](AxiomResult& r, int idx) {
        if (!r.ok) return;
        r.ok = false;
        const auto [i, j, l] = alg.decode(idx);
        r.detail = "fails on E^" + std::to_string(i) + " F^" + std::to_string(j) + " g^" + std::to_string(l);
    };
    AxiomResult coassoc{"coassociativity", true, ""}, counit_l{"counit (eps x id)", true, ""},
        counit_r{"counit (id x eps)", true, ""}, anti_l{"antipode m(S x id)Delta", true, ""},
        anti_r{"antipode m(id x S)Delta", true, ""}, delta_mult{"Delta multiplicative", true, ""},
        eps_mult{"eps multiplicative", true, ""}, s_anti{"S anti-multiplicative", true, ""};

    for (int b = 0; b < dim; ++b) {
        const TensorElem& d = maps.coproduct_basis(b);
        if (maps.coproduct_left(d) != maps.coproduct_right(d)) fail_at(coassoc, b);
        AlgElem cl(alg), cr(alg), al(alg), ar(alg);
        for (const auto& [k, c] : d.terms()) {
            const auto idx = d.decode(k);
            const AlgElem x = alg.basis(idx[0]), y = alg.basis(idx[1]);
            cl = cl + y.scaled(c * maps.counit(x));
            cr = cr + x.scaled(c * maps.counit(y));
            al = al + (maps.antipode_basis(idx[0]) * y).scaled(c);
            ar = ar + (x * maps.antipode_basis(idx[1])).scaled(c);
        }
        const AlgElem bb = alg.basis(b);
        const AlgElem unit = alg.scalar(maps.counit(bb));
        if (cl != bb) fail_at(counit_l, b);
        if (cr != bb) fail_at(counit_r, b);
        if (al != unit) fail_at(anti_l, b);
        if (ar != unit) fail_at(anti_r, b);

        for (const AlgElem& gen : {alg.E(), alg.F(), alg.g()}) {
            const AlgElem gb = gen * bb;
            if (maps.coproduct(gb) != maps.coproduct(gen) * d) fail_at(delta_mult, b);
            if (maps.counit(gb) != maps.counit(gen) * maps.counit(bb)) fail_at(eps_mult, b);
            if (maps.antipode(gb) != maps.antipode(bb) * maps.antipode(gen)) fail_at(s_anti, b);
        }
    }
    rep.axioms = {coassoc, counit_l, counit_r, anti_l, anti_r, delta_mult, eps_mult, s_anti};
    return rep;
}

HopfReport verify_hopf(int p) {
    const auto& alg = PBWAlgebra::restricted(p);
    return verify_hopf(alg, HopfStructure::standard(alg));
}

// ---------------------------------------------------------------------------
// Casimir and center

AlgElem casimir_element(const PBWAlgebra& alg) {
    const CycNum q = alg.q(), qi = q.inverse();
    const CycNum den = (q - qi).pow(2).inverse();
    return alg.E() * alg.F() + (alg.K().scaled(qi) + alg.K_inv().scaled(q)).scaled(den);
}

AlgElem casimir_element_fe(const PBWAlgebra& alg) {
    const CycNum q = alg.q(), qi = q.inverse();
    const CycNum den = (q - qi).pow(2).inverse();
    return alg.F() * alg.E() + (alg.K().scaled(q) + alg.K_inv().scaled(qi)).scaled(den);
}

CycNum casimir_root(int p, int j) {
    const CycNum q = qroot(p), qi = q.inverse();
    return (q.pow(j) + qi.pow(j)) * (q - qi).pow(2).inverse();
}

CasimirData casimir(int p) {
    const auto& alg = PBWAlgebra::restricted(p);
    CasimirData d;
    d.element = casimir_element(alg);
    for (int j = 0; j <= p; ++j) {
        d.roots.push_back(casimir_root(p, j));
        d.multiplicities.push_back(j == 0 || j == p ? 1 : 2);
    }
    return d;
}

AlgElem evaluate_product(const AlgElem& a, const std::vector<CycNum>& roots, const std::vector<int>& mult) {
    const auto& alg = a.algebra();
    AlgElem r = alg.one();
    for (std::size_t k = 0; k < roots.size(); ++k) {
        const AlgElem f = a - alg.scalar(roots[k]);
        for (int m = 0; m < mult[k]; ++m) r = r * f;
    }
    return r;
}

std::vector<AlgElem> center_basis(const PBWAlgebra& alg) {
    const int dim = alg.dim();
    const AlgElem gens[3] = {alg.E(), alg.F(), alg.g()};
    // row (generator, output index) of the map z -> ([z, gen])_gen
    std::vector<SparseRow> rows(3 * static_cast<std::size_t>(dim));
    for (int b = 0; b < dim; ++b) {
        const AlgElem x = alg.basis(b);
        for (int g = 0; g < 3; ++g) {
            const AlgElem c = x * gens[g] - gens[g] * x;
            for (const auto& [idx, v] : c.terms()) rows[static_cast<std::size_t>(g) * dim + idx].emplace_back(b, v);
        }
    }
    SparseEchelon ech(dim);
    for (const auto& r : rows)
        if (!r.empty()) ech.add_row(r);
    const Matrix ns = ech.nullspace();
    std::vector<AlgElem> out;
    for (int k = 0; k < ns.cols(); ++k) {
        Terms t;
        for (int i = 0; i < dim; ++i)
            if (!ns(i, k).is_zero()) t.emplace(i, ns(i, k));
        out.emplace_back(alg, std::move(t));
    }
    return out;
}

std::vector<AlgElem> center_basis(int p) { return center_basis(PBWAlgebra::restricted(p)); }

bool in_span(const std::vector<AlgElem>& basis, const AlgElem& x) {
    if (x.is_zero()) return true;
    if (basis.empty()) return false;
    const int dim = x.algebra().dim();
    Matrix a(dim, static_cast<int>(basis.size()));
    Matrix b(dim, 1);
    for (std::size_t k = 0; k < basis.size(); ++k)
        for (const auto& [idx, v] : basis[k].terms()) a(idx, static_cast<int>(k)) = v;
    for (const auto& [idx, v] : x.terms()) b(idx, 0) = v;
    return solve(a, b).has_value();
}

}  // namespace uqsl
