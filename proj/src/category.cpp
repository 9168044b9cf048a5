#include "uqsl/category.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "uqsl/algebra.hpp"
#include "uqsl/kronecker.hpp"

namespace uqsl {

namespace {

int mod(long a, int n) {
    long r = a % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

using SparseCols = std::vector<std::vector<std::pair<int, CycNum>>>;

SparseCols sparse_cols(const Matrix& m) {
    SparseCols c(m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) c[j].emplace_back(i, m(i, j));
    return c;
}

SparseCols sparse_rows(const Matrix& m) {
    SparseCols r(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) r[i].emplace_back(j, m(i, j));
    return r;
}

/// Rows and columns of the weight-w block.
std::vector<int> weight_indices(const std::vector<int>& w, int x) {
    std::vector<int> idx;
    for (int i = 0; i < static_cast<int>(w.size()); ++i)
        if (w[i] == x) idx.push_back(i);
    return idx;
}

/// Invertibility of a weight-preserving map, decided block by block.
bool invertible_homogeneous(const ModMap& f, const std::vector<int>& wa, const std::vector<int>& wb) {
    if (f.rows() != f.cols()) return false;
    std::map<int, int> ca, cb;
    for (int x : wa) ++ca[x];
    for (int x : wb) ++cb[x];
    if (ca != cb) return false;
    for (const auto& [w, n] : ca) {
        const Matrix blk = f.select_rows(weight_indices(wb, w)).select_cols(weight_indices(wa, w));
        if (rank(blk) != n) return false;
    }
    return true;
}

std::vector<CycNum> act(const Matrix& m, const std::vector<CycNum>& v) { return mat_vec(m, v); }

/// Columns F^n v, n = 0..s-1: the image of X_s under a_0 -> v.
Matrix lowering_chain(const QMod& m, const std::vector<CycNum>& v, int s) {
    Matrix out(m.dim(), s);
    std::vector<CycNum> cur = v;
    for (int n = 0; n < s; ++n) {
        out.set_col(n, cur);
        cur = act(m.F(), cur);
    }
    return out;
}

struct Piece {
    ModuleLabel label;
    Matrix embedding;  // build_named(label) -> ambient
};

/// Embedding of the k-th block's G-module into G(direct sum of blocks).
Matrix block_in_total(const std::vector<KronBlock>& blocks, int k, int s, int t) {
    int top_total = 0, soc_total = 0;
    for (const auto& b : blocks) {
        const QuiverRep c = b.canonical();
        top_total += c.d0;
        soc_total += c.d1;
    }
    int top_off = 0, soc_off = 0;
    for (int i = 0; i < k; ++i) {
        const QuiverRep c = blocks[i].canonical();
        top_off += c.d0;
        soc_off += c.d1;
    }
    const QuiverRep c = blocks[k].canonical();
    const int dim_total = top_total * s + soc_total * t;
    Matrix e(dim_total, c.d0 * s + c.d1 * t);
    for (int j = 0; j < c.d0 * s; ++j) e(top_off * s + j, j) = CycNum(1, 1L);
    for (int i = 0; i < c.d1 * t; ++i) e(top_total * s + soc_off * t + i, c.d0 * s + i) = CycNum(1, 1L);
    return e;
}

/// Pieces of a semisimple-length <= 2 module on which the Kronecker functor applies.
void classify_glued(const QMod& mod, const Subspace& sub, int a, int s, std::vector<Piece>& out) {
    if (sub.dim() == 0) return;
    const int p = mod.p(), t = p - s;
    const QMod part = restrict_module(mod, sub);
    const FunctorImage img = functor_F(part, a, s);
    const QuiverDecomp qd = classify(img.rep, 2 * p);
    const ModMap counit = functor_counit(img, p, a, s);
    const Matrix theta = block_diag({kronecker(qd.b0, Matrix::identity(s)), kronecker(qd.b1, Matrix::identity(t))});
    const Matrix to_mod = sub.basis * counit * theta;
    for (std::size_t k = 0; k < qd.blocks.size(); ++k)
        out.push_back({label_for_block(qd.blocks[k], a, s, p),
                       to_mod * block_in_total(qd.blocks, static_cast<int>(k), s, t)});
}

/// Decomposition of a module lying in block s, 1 <= s <= p-1.
std::vector<Piece> decompose_block(const QMod& block, int s) {
    const int p = block.p();
    std::vector<Piece> pieces;
    QMod cur = block;
    Matrix cur_emb = Matrix::identity(block.dim());
    const std::pair<int, int> signs[2] = {{1, s}, {-1, p - s}};

    // projective summands: each embedding of P splits since P is injective
    for (const auto& [a, sa] : signs) {
        const QMod P = build_P(p, a, sa);
        while (cur.dim() > 0) {
            const auto H = hom_space(P, cur);
            const ModMap* phi = nullptr;
            for (const auto& h : H) {
                bool hits_socle = false;
                for (int i = 0; i < h.rows() && !hits_socle; ++i) hits_socle = !h(i, 0).is_zero();
                if (hits_socle) {
                    phi = &h;
                    break;
                }
            }
            if (!phi) break;
            const auto G = hom_space(cur, P);
            const int n = P.dim();
            Matrix sys(n * n, static_cast<int>(G.size())), rhs(n * n, 1);
            for (std::size_t k = 0; k < G.size(); ++k) {
                const Matrix gp = G[k] * *phi;
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) sys(i * n + j, static_cast<int>(k)) = gp(i, j);
            }
            for (int i = 0; i < n; ++i) rhs(i * n + i, 0) = CycNum(1, 1L);
            const auto c = solve(sys, rhs);
            if (!c) throw ClassificationError("no retraction onto an embedded projective module");
            Matrix psi(n, cur.dim());
            for (std::size_t k = 0; k < G.size(); ++k)
                if (!(*c)(static_cast<int>(k), 0).is_zero()) psi = psi + G[k].scaled((*c)(static_cast<int>(k), 0));
            pieces.push_back({ModuleLabel{Family::P, a, sa}, cur_emb * *phi});
            const Subspace comp = kernel(psi, cur);
            const QMod next = restrict_module(cur, comp);
            cur_emb = cur_emb * comp.basis;
            cur = next;
        }
    }
    if (cur.dim() == 0) return pieces;
    if (semisimple_length(cur) > 2)
        throw ClassificationError("remainder after removing projective summands has semisimple length > 2");

    const Subspace soc = socle(cur), rad = radical(cur);
    for (const auto& [a, sa] : signs) {
        const int hw = weight_exponent(p, a, sa - 1);
        const auto H = weight_indices(cur.weights(), hw);
        std::vector<int> soc_cols, rad_cols;
        for (int k = 0; k < soc.dim(); ++k)
            if (soc.weights[k] == hw) soc_cols.push_back(k);
        for (int k = 0; k < rad.dim(); ++k)
            if (rad.weights[k] == hw) rad_cols.push_back(k);
        const Matrix socH = soc.basis.select_cols(soc_cols);
        const Matrix radH = rad.basis.select_cols(rad_cols);

        // simple summands: socle highest-weight vectors independent of the radical
        {
            const Matrix both = hstack({radH, socH}, cur.dim());
            for (int k : independent_columns(both))
                if (k >= radH.cols()) {
                    const Matrix chain = lowering_chain(cur, socH.col(k - radH.cols()), sa);
                    pieces.push_back({ModuleLabel{Family::X, a, sa}, cur_emb * chain});
                }
        }
        // tops: highest-weight vectors completing the socle part
        Matrix unit(cur.dim(), static_cast<int>(H.size()));
        for (std::size_t k = 0; k < H.size(); ++k) unit(H[k], static_cast<int>(k)) = CycNum(1, 1L);
        const Matrix cand = hstack({socH, unit}, cur.dim());
        std::vector<int> chosen;
        for (int k : independent_columns(cand))
            if (k >= socH.cols()) chosen.push_back(k);
        const Subspace gen = generated_submodule(cur, cand.select_cols(chosen));
        std::vector<Piece> local;
        classify_glued(cur, gen, a, sa, local);
        for (auto& pc : local) pieces.push_back({pc.label, cur_emb * pc.embedding});
    }
    return pieces;
}

}  // namespace

// ---------------------------------------------------------------------------
// Hom spaces and subspaces

std::vector<ModMap> hom_space(const QMod& a, const QMod& b) {
    if (a.p() != b.p()) throw std::invalid_argument("hom_space: modules with different p");
    const int da = a.dim(), db = b.dim(), n = a.order();
    const auto& wa = a.weights();
    const auto& wb = b.weights();
    std::vector<int> var(static_cast<std::size_t>(db) * da, -1);
    std::vector<std::pair<int, int>> pos;
    for (int i = 0; i < db; ++i)
        for (int j = 0; j < da; ++j)
            if (wb[i] == wa[j]) {
                var[static_cast<std::size_t>(i) * da + j] = static_cast<int>(pos.size());
                pos.emplace_back(i, j);
            }
    if (pos.empty()) return {};
    SparseEchelon ech(static_cast<int>(pos.size()));
    auto add_equations = [&](const Matrix& xa, const Matrix& xb, int shift) {
        const SparseCols ca = sparse_cols(xa), rb = sparse_rows(xb);
        for (int i = 0; i < db; ++i)
            for (int k = 0; k < da; ++k) {
                if (wb[i] != mod(wa[k] + shift, n)) continue;
                // (Phi xa - xb Phi)_{ik}
                std::map<int, CycNum> row;
                for (const auto& [j, v] : ca[k]) {
                    const int x = var[static_cast<std::size_t>(i) * da + j];
                    if (x >= 0) row[x] += v;
                }
                for (const auto& [j, v] : rb[i]) {
                    const int x = var[static_cast<std::size_t>(j) * da + k];
                    if (x >= 0) row[x] -= v;
                }
                SparseRow sr;
                for (auto& [x, v] : row)
                    if (!v.is_zero()) sr.emplace_back(x, v);
                if (!sr.empty()) ech.add_row(sr);
            }
    };
    add_equations(a.E(), b.E(), 2);
    add_equations(a.F(), b.F(), -2);
    const Matrix ns = ech.nullspace();
    std::vector<ModMap> out;
    for (int k = 0; k < ns.cols(); ++k) {
        ModMap f(db, da);
        for (std::size_t x = 0; x < pos.size(); ++x) f(pos[x].first, pos[x].second) = ns(static_cast<int>(x), k);
        out.push_back(std::move(f));
    }
    return out;
}

bool is_intertwiner(const ModMap& f, const QMod& a, const QMod& b) {
    if (f.rows() != b.dim() || f.cols() != a.dim()) return false;
    return f * a.E() == b.E() * f && f * a.F() == b.F() * f && f * a.K() == b.K() * f;
}

Subspace homogenize(const Matrix& v, const std::vector<int>& weights) {
    std::map<int, std::vector<int>> by_weight;
    for (int i = 0; i < static_cast<int>(weights.size()); ++i) by_weight[weights[i]].push_back(i);
    std::vector<Matrix> cols;
    Subspace out;
    for (const auto& [w, rows] : by_weight) {
        const Matrix part = v.select_rows(rows);
        for (int k : independent_columns(part)) {
            Matrix c(v.rows(), 1);
            for (std::size_t r = 0; r < rows.size(); ++r) c(rows[r], 0) = part(static_cast<int>(r), k);
            cols.push_back(std::move(c));
            out.weights.push_back(w);
        }
    }
    out.basis = cols.empty() ? Matrix(v.rows(), 0) : hstack(cols, v.rows());
    return out;
}

Subspace generated_submodule(const QMod& m, const Matrix& vectors) {
    const Subspace start = homogenize(vectors, m.weights());
    SparseEchelon ech(m.dim());
    std::vector<std::pair<std::vector<CycNum>, int>> found, queue;
    auto consider = [&](std::vector<CycNum> v, int w) {
        if (ech.add_dense(v)) {
            found.emplace_back(v, w);
            queue.emplace_back(std::move(v), w);
        }
    };
    for (int k = 0; k < start.dim(); ++k) consider(start.basis.col(k), start.weights[k]);
    while (!queue.empty()) {
        auto [v, w] = std::move(queue.back());
        queue.pop_back();
        consider(mat_vec(m.E(), v), mod(w + 2, m.order()));
        consider(mat_vec(m.F(), v), mod(w - 2, m.order()));
    }
    Subspace out;
    out.basis = Matrix(m.dim(), static_cast<int>(found.size()));
    for (std::size_t k = 0; k < found.size(); ++k) {
        out.basis.set_col(static_cast<int>(k), found[k].first);
        out.weights.push_back(found[k].second);
    }
    return out;
}

QMod restrict_module(const QMod& m, const Subspace& sub) {
    if (sub.dim() == 0) return QMod(m.p(), {}, Matrix(0, 0), Matrix(0, 0));
    const Matrix l = left_inverse(sub.basis);
    const Matrix E = l * (m.E() * sub.basis), F = l * (m.F() * sub.basis);
    if (sub.basis * E != m.E() * sub.basis || sub.basis * F != m.F() * sub.basis)
        throw std::invalid_argument("restrict_module: subspace is not a submodule");
    return QMod(m.p(), sub.weights, E, F);
}

Subspace kernel(const ModMap& f, const QMod& source) { return homogenize(nullspace(f), source.weights()); }

Subspace image(const ModMap& f, const QMod& target) { return homogenize(f, target.weights()); }

// ---------------------------------------------------------------------------
// Blocks

Matrix casimir_matrix(const QMod& m) {
    const CycNum q = qroot(m.p()), qi = q.inverse();
    const CycNum den = (q - qi).pow(2).inverse();
    return m.E() * m.F() + (m.K().scaled(qi) + m.K_inv().scaled(q)).scaled(den);
}

int block_of_irreducible(int p, int a, int s) { return a > 0 ? s : p - s; }

std::vector<Block> block_decompose(const QMod& m) {
    const int p = m.p();
    const Matrix C = casimir_matrix(m);
    std::map<int, std::vector<int>> by_weight;
    for (int i = 0; i < m.dim(); ++i) by_weight[m.weights()[i]].push_back(i);
    std::vector<std::vector<Matrix>> cols(p + 1);
    std::vector<std::vector<int>> wts(p + 1);
    int total = 0;
    for (const auto& [w, idx] : by_weight) {
        const Matrix cw = C.select_rows(idx).select_cols(idx);
        const int d = static_cast<int>(idx.size());
        for (int s = 0; s <= p; ++s) {
            const Matrix nmat = (cw - Matrix::identity(d).scaled(casimir_root(p, s))).pow(d);
            const Matrix ker = nullspace(nmat);
            for (int k = 0; k < ker.cols(); ++k) {
                Matrix c(m.dim(), 1);
                for (int r = 0; r < d; ++r) c(idx[r], 0) = ker(r, k);
                cols[s].push_back(std::move(c));
                wts[s].push_back(w);
            }
            total += ker.cols();
        }
    }
    if (total != m.dim()) throw ClassificationError("Casimir generalized eigenspaces do not span the module");
    std::vector<Block> out;
    for (int s = 0; s <= p; ++s) {
        if (cols[s].empty()) continue;
        Subspace sub{hstack(cols[s], m.dim()), wts[s]};
        out.push_back({s, restrict_module(m, sub), sub.basis});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Socle and radical

Subspace socle(const QMod& m) {
    std::vector<Matrix> images;
    for (int a : {1, -1})
        for (int s = 1; s <= m.p(); ++s)
            for (const auto& f : hom_space(irreducible(m.p(), a, s), m)) images.push_back(f);
    if (images.empty()) return Subspace{Matrix(m.dim(), 0), {}};
    return homogenize(hstack(images, m.dim()), m.weights());
}

Subspace radical(const QMod& m) {
    std::vector<Matrix> maps;
    for (int a : {1, -1})
        for (int s = 1; s <= m.p(); ++s)
            for (const auto& f : hom_space(m, irreducible(m.p(), a, s))) maps.push_back(f);
    if (maps.empty()) return homogenize(Matrix::identity(m.dim()), m.weights());
    return kernel(vstack(maps, m.dim()), m);
}

std::vector<Subspace> radical_series(const QMod& m) {
    std::vector<Subspace> series{homogenize(Matrix::identity(m.dim()), m.weights())};
    QMod cur = m;
    while (series.back().dim() > 0) {
        const Subspace r = radical(cur);
        if (r.dim() == cur.dim()) throw ClassificationError("radical did not shrink");
        Subspace next{series.back().basis * r.basis, r.weights};
        cur = restrict_module(cur, r);
        series.push_back(std::move(next));
    }
    return series;
}

int semisimple_length(const QMod& m) { return static_cast<int>(radical_series(m).size()) - 1; }

// ---------------------------------------------------------------------------
// Isomorphism

std::optional<ModMap> find_isomorphism(const QMod& a, const QMod& b) {
    if (a.p() != b.p() || a.dim() != b.dim()) return std::nullopt;
    if (weight_character(a) != weight_character(b)) return std::nullopt;
    if (a.dim() == 0) return Matrix(0, 0);
    const auto H = hom_space(a, b);
    if (H.empty()) return std::nullopt;
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> coef(-7, 7);
    for (int attempt = 0; attempt < 12; ++attempt) {
        ModMap f(b.dim(), a.dim());
        for (const auto& h : H) {
            const int c = coef(rng);
            if (c != 0) f = f + h.scaled(CycNum(1, static_cast<long>(c)));
        }
        if (invertible_homogeneous(f, a.weights(), b.weights())) return f;
    }
    return std::nullopt;
}

bool is_isomorphic(const QMod& a, const QMod& b) { return find_isomorphism(a, b).has_value(); }

// ---------------------------------------------------------------------------
// Decomposition

DecompReport decompose(const QMod& m) {
    const auto check = verify_module(m);
    if (!check.ok) throw std::invalid_argument("decompose: not a module (" + check.violated + ")");
    const int p = m.p();
    std::vector<Piece> pieces;
    for (const Block& blk : block_decompose(m)) {
        if (blk.s == 0 || blk.s == p) {
            const int a = blk.s == p ? 1 : -1;
            const int hw = weight_exponent(p, a, p - 1);
            for (int i : weight_indices(blk.module.weights(), hw)) {
                std::vector<CycNum> v(blk.module.dim());
                v[i] = CycNum(1, 1L);
                pieces.push_back({ModuleLabel{Family::X, a, p}, blk.embedding * lowering_chain(blk.module, v, p)});
            }
            continue;
        }
        for (auto& pc : decompose_block(blk.module, blk.s)) pieces.push_back({pc.label, blk.embedding * pc.embedding});
    }

    DecompReport rep;
    std::vector<QMod> parts;
    std::vector<Matrix> embeds;
    for (const auto& pc : pieces) {
        rep.summands.push_back(pc.label);
        parts.push_back(build_named(p, pc.label));
        embeds.push_back(pc.embedding);
    }
    rep.certificate = embeds.empty() ? Matrix(0, 0) : hstack(embeds, m.dim());
    if (!parts.empty()) {
        const QMod sum = direct_sum(parts);
        if (!is_intertwiner(rep.certificate, sum, m) ||
            !invertible_homogeneous(rep.certificate, sum.weights(), m.weights()))
            throw ClassificationError("decomposition certificate is not an isomorphism");
    } else if (m.dim() != 0) {
        throw ClassificationError("no summands found");
    }
    for (const auto& l : rep.summands) {
        auto it = std::find_if(rep.entries.begin(), rep.entries.end(), [&](const DecompEntry& e) { return e.label == l; });
        if (it == rep.entries.end())
            rep.entries.push_back({l, 1});
        else
            ++it->mult;
    }
    std::sort(rep.entries.begin(), rep.entries.end(),
              [](const DecompEntry& x, const DecompEntry& y) { return x.label.to_string() < y.label.to_string(); });
    return rep;
}

}  // namespace uqsl
