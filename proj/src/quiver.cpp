#include "detcoh/quiver.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace detcoh {

namespace {

void require_shapes(const QuiverRep& r) {
    if (r.n < 0) throw std::invalid_argument("quiver size must be >= 0");
    if (static_cast<long long>(r.dims.size()) != r.n + 1 ||
        static_cast<long long>(r.alpha.size()) != r.n ||
        static_cast<long long>(r.beta.size()) != r.n)
        throw std::invalid_argument("quiver representation vectors have wrong lengths");
    for (long long k = 0; k < r.n; ++k) {
        const RatMat& A = r.alpha[static_cast<size_t>(k)];
        const RatMat& B = r.beta[static_cast<size_t>(k)];
        if (A.rows() != r.dims[static_cast<size_t>(k + 1)] ||
            A.cols() != r.dims[static_cast<size_t>(k)])
            throw std::invalid_argument("alpha matrix shape mismatch");
        if (B.rows() != r.dims[static_cast<size_t>(k)] ||
            B.cols() != r.dims[static_cast<size_t>(k + 1)])
            throw std::invalid_argument("beta matrix shape mismatch");
    }
}

// rank of the composite alpha path space(i) -> space(j), i <= j
long long alpha_path_rank(const QuiverRep& r, long long i, long long j) {
    if (i == j) return r.dims[static_cast<size_t>(i)];
    RatMat m = r.alpha[static_cast<size_t>(i)];
    for (long long k = i + 1; k < j; ++k) m = r.alpha[static_cast<size_t>(k)] * m;
    return m.rank();
}

} // namespace

std::string QuiverRep::str() const {
    std::ostringstream out;
    out << "dims = (";
    for (size_t i = 0; i < dims.size(); ++i) {
        if (i) out << ",";
        out << dims[i];
    }
    out << ")\n";
    for (long long k = 0; k < n; ++k) {
        if (!alpha[static_cast<size_t>(k)].is_zero())
            out << "alpha_" << (k + 1) << ":\n" << alpha[static_cast<size_t>(k)].str();
        if (!beta[static_cast<size_t>(k)].is_zero())
            out << "beta_" << (k + 1) << ":\n" << beta[static_cast<size_t>(k)].str();
    }
    return out.str();
}

QuiverRep build_rep(RepKind kind, long long p, long long n) {
    if (n < 0 || p < 0 || p > n) throw std::invalid_argument("build_rep requires 0 <= p <= n");
    QuiverRep r;
    r.n = n;
    r.dims.assign(static_cast<size_t>(n + 1), 0);
    if (kind == RepKind::D) {
        r.dims[static_cast<size_t>(p)] = 1;
    } else {
        for (long long i = 0; i <= p; ++i) r.dims[static_cast<size_t>(i)] = 1;
    }
    for (long long k = 0; k < n; ++k) {
        RatMat A(r.dims[static_cast<size_t>(k + 1)], r.dims[static_cast<size_t>(k)]);
        if (kind == RepKind::Q && k + 1 <= p) A.at(0, 0) = 1;
        r.alpha.push_back(std::move(A));
        r.beta.emplace_back(r.dims[static_cast<size_t>(k)], r.dims[static_cast<size_t>(k + 1)]);
    }
    return r;
}

QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b) {
    require_shapes(a);
    require_shapes(b);
    if (a.n != b.n) throw std::invalid_argument("direct_sum on different quivers");
    QuiverRep r;
    r.n = a.n;
    for (size_t i = 0; i < a.dims.size(); ++i) r.dims.push_back(a.dims[i] + b.dims[i]);
    auto diag = [](const RatMat& x, const RatMat& y) {
        RatMat m(x.rows() + y.rows(), x.cols() + y.cols());
        for (long long i = 0; i < x.rows(); ++i)
            for (long long j = 0; j < x.cols(); ++j) m.at(i, j) = x.at(i, j);
        for (long long i = 0; i < y.rows(); ++i)
            for (long long j = 0; j < y.cols(); ++j)
                m.at(x.rows() + i, x.cols() + j) = y.at(i, j);
        return m;
    };
    for (long long k = 0; k < a.n; ++k) {
        r.alpha.push_back(diag(a.alpha[static_cast<size_t>(k)], b.alpha[static_cast<size_t>(k)]));
        r.beta.push_back(diag(a.beta[static_cast<size_t>(k)], b.beta[static_cast<size_t>(k)]));
    }
    return r;
}

bool check_relations(const QuiverRep& r) {
    require_shapes(r);
    for (long long k = 0; k < r.n; ++k) {
        const RatMat& A = r.alpha[static_cast<size_t>(k)];
        const RatMat& B = r.beta[static_cast<size_t>(k)];
        if (!(A * B).is_zero()) return false;
        if (!(B * A).is_zero()) return false;
    }
    return true;
}

std::vector<std::pair<long long, long long>> simple_socle(const QuiverRep& r) {
    require_shapes(r);
    std::vector<std::pair<long long, long long>> out;
    for (long long i = 0; i <= r.n; ++i) {
        long long d = r.dims[static_cast<size_t>(i)];
        if (d == 0) continue;
        RatMat leaving(0, d);
        if (i < r.n) leaving = RatMat::vstack(leaving, r.alpha[static_cast<size_t>(i)]);
        if (i >= 1) leaving = RatMat::vstack(leaving, r.beta[static_cast<size_t>(i - 1)]);
        long long mult = d - leaving.rank();
        if (mult > 0) out.emplace_back(i, mult);
    }
    return out;
}

QuiverRep quotient(const QuiverRep& r, const std::vector<RatMat>& sub) {
    require_shapes(r);
    if (static_cast<long long>(sub.size()) != r.n + 1)
        throw std::invalid_argument("quotient: one subspace per vertex required");

    std::vector<RatMat> basis;   // independent columns of each subspace
    std::vector<RatMat> full;    // basis extended to the whole vertex space
    std::vector<RatMat> fullinv; // its inverse
    std::vector<long long> subdim, qdim;
    for (long long i = 0; i <= r.n; ++i) {
        const long long d = r.dims[static_cast<size_t>(i)];
        if (sub[static_cast<size_t>(i)].rows() != d)
            throw std::invalid_argument("quotient: subspace row count mismatch");
        RatMat S = sub[static_cast<size_t>(i)].column_basis();
        // extend to a full basis with standard vectors
        RatMat F = S;
        for (long long e = 0; e < d && F.cols() < d; ++e) {
            RatMat col(d, 1);
            col.at(e, 0) = 1;
            if (!in_column_space(F, col)) F = RatMat::hstack(F, col);
        }
        basis.push_back(S);
        subdim.push_back(S.cols());
        qdim.push_back(d - S.cols());
        full.push_back(F);
        fullinv.push_back(d > 0 ? F.inverse() : RatMat(0, 0));
    }

    auto induced = [&](const RatMat& A, long long from, long long to) {
        // stability: A maps the subspace at `from` into the one at `to`
        RatMat img = A * basis[static_cast<size_t>(from)];
        if (!in_column_space(basis[static_cast<size_t>(to)], img))
            throw std::invalid_argument("quotient: subspace is not arrow-stable");
        long long dt = r.dims[static_cast<size_t>(to)];
        long long df = r.dims[static_cast<size_t>(from)];
        if (dt == 0 || df == 0)
            return RatMat(qdim[static_cast<size_t>(to)], qdim[static_cast<size_t>(from)]);
        RatMat changed = fullinv[static_cast<size_t>(to)] * A * full[static_cast<size_t>(from)];
        return changed.block(subdim[static_cast<size_t>(to)], subdim[static_cast<size_t>(from)],
                             qdim[static_cast<size_t>(to)], qdim[static_cast<size_t>(from)]);
    };

    QuiverRep q;
    q.n = r.n;
    q.dims.assign(qdim.begin(), qdim.end());
    for (long long k = 0; k < r.n; ++k) {
        q.alpha.push_back(induced(r.alpha[static_cast<size_t>(k)], k, k + 1));
        q.beta.push_back(induced(r.beta[static_cast<size_t>(k)], k + 1, k));
    }
    return q;
}

bool iso_chain_reps(const QuiverRep& a, const QuiverRep& b) {
    require_shapes(a);
    require_shapes(b);
    if (a.n != b.n) return false;
    for (long long k = 0; k < a.n; ++k)
        if (!a.beta[static_cast<size_t>(k)].is_zero() ||
            !b.beta[static_cast<size_t>(k)].is_zero())
            throw std::invalid_argument("iso_chain_reps requires all beta maps zero");
    if (a.dims != b.dims) return false;
    for (long long i = 0; i <= a.n; ++i)
        for (long long j = i + 1; j <= a.n; ++j)
            if (alpha_path_rank(a, i, j) != alpha_path_rank(b, i, j)) return false;
    return true;
}

AddQResult decompose_addQ(const QuiverRep& r) {
    require_shapes(r);
    if (!check_relations(r))
        throw std::invalid_argument("decompose_addQ requires the 2-cycle relations");
    for (long long k = 0; k < r.n; ++k)
        if (!r.beta[static_cast<size_t>(k)].is_zero())
            return AddQResult{std::nullopt, k + 1}; // nonzero beta out of vertex k+1

    // With beta = 0 this is a chain representation: Krull-Schmidt splits it
    // into interval summands [i, j], with multiplicity given by the rank
    // inclusion-exclusion below. In add(Q) iff every interval starts at 0.
    auto rk = [&](long long i, long long j) -> long long {
        if (i < 0 || j > r.n || i > j) return 0;
        return alpha_path_rank(r, i, j);
    };
    std::vector<long long> mults(static_cast<size_t>(r.n + 1), 0);
    for (long long i = 0; i <= r.n; ++i)
        for (long long j = i; j <= r.n; ++j) {
            long long m = rk(i, j) - rk(i - 1, j) - rk(i, j + 1) + rk(i - 1, j + 1);
            if (m < 0) throw std::logic_error("negative interval multiplicity");
            if (m == 0) continue;
            if (i >= 1) return AddQResult{std::nullopt, i};
            mults[static_cast<size_t>(j)] += m;
        }
    return AddQResult{std::move(mults), -1};
}

long long ext1_dim(const QuiverRep& V, const QuiverRep& W) {
    require_shapes(V);
    require_shapes(W);
    if (V.n != W.n) throw std::invalid_argument("ext1_dim on different quivers");
    if (!check_relations(V) || !check_relations(W))
        throw std::invalid_argument("ext1_dim requires the 2-cycle relations");
    const long long n = V.n;
    auto vd = [&](long long i) { return V.dims[static_cast<size_t>(i)]; };
    auto wd = [&](long long i) { return W.dims[static_cast<size_t>(i)]; };

    // unknown layout: f_alpha[k] in Hom(V_k, W_{k+1}), then f_beta[k] in
    // Hom(V_{k+1}, W_k), flattened row-major
    std::vector<long long> fa_off(static_cast<size_t>(n)), fb_off(static_cast<size_t>(n));
    long long nunk = 0;
    for (long long k = 0; k < n; ++k) {
        fa_off[static_cast<size_t>(k)] = nunk;
        nunk += wd(k + 1) * vd(k);
    }
    for (long long k = 0; k < n; ++k) {
        fb_off[static_cast<size_t>(k)] = nunk;
        nunk += wd(k) * vd(k + 1);
    }
    auto fa_idx = [&](long long k, long long i, long long j) {
        return fa_off[static_cast<size_t>(k)] + i * vd(k) + j;
    };
    auto fb_idx = [&](long long k, long long i, long long j) {
        return fb_off[static_cast<size_t>(k)] + i * vd(k + 1) + j;
    };

    // linearized relations on the extension: for each k,
    //   W.alpha_k f_beta_k + f_alpha_k V.beta_k = 0   (V_{k+1} -> W_{k+1})
    //   W.beta_k  f_alpha_k + f_beta_k  V.alpha_k = 0 (V_k     -> W_k)
    long long nrows = 0;
    for (long long k = 0; k < n; ++k) nrows += wd(k + 1) * vd(k + 1) + wd(k) * vd(k);
    RatMat C(nrows, nunk);
    long long row = 0;
    for (long long k = 0; k < n; ++k) {
        const RatMat& WA = W.alpha[static_cast<size_t>(k)];
        const RatMat& WB = W.beta[static_cast<size_t>(k)];
        const RatMat& VA = V.alpha[static_cast<size_t>(k)];
        const RatMat& VB = V.beta[static_cast<size_t>(k)];
        for (long long i = 0; i < wd(k + 1); ++i)
            for (long long j = 0; j < vd(k + 1); ++j) {
                for (long long t = 0; t < wd(k); ++t)
                    if (WA.at(i, t) != 0) C.at(row, fb_idx(k, t, j)) += WA.at(i, t);
                for (long long t = 0; t < vd(k); ++t)
                    if (VB.at(t, j) != 0) C.at(row, fa_idx(k, i, t)) += VB.at(t, j);
                ++row;
            }
        for (long long i = 0; i < wd(k); ++i)
            for (long long j = 0; j < vd(k); ++j) {
                for (long long t = 0; t < wd(k + 1); ++t)
                    if (WB.at(i, t) != 0) C.at(row, fa_idx(k, t, j)) += WB.at(i, t);
                for (long long t = 0; t < vd(k + 1); ++t)
                    if (VA.at(t, j) != 0) C.at(row, fb_idx(k, i, t)) += VA.at(t, j);
                ++row;
            }
    }
    long long dim_cocycles = nunk - C.rank();

    // coboundaries: g = (g_i: V_i -> W_i) maps to
    //   f_alpha_k = W.alpha_k g_k     - g_{k+1} V.alpha_k
    //   f_beta_k  = W.beta_k  g_{k+1} - g_k     V.beta_k
    std::vector<long long> g_off(static_cast<size_t>(n + 1));
    long long ng = 0;
    for (long long i = 0; i <= n; ++i) {
        g_off[static_cast<size_t>(i)] = ng;
        ng += wd(i) * vd(i);
    }
    auto g_idx = [&](long long v, long long i, long long j) {
        return g_off[static_cast<size_t>(v)] + i * vd(v) + j;
    };
    RatMat D(nunk, ng);
    for (long long k = 0; k < n; ++k) {
        const RatMat& WA = W.alpha[static_cast<size_t>(k)];
        const RatMat& WB = W.beta[static_cast<size_t>(k)];
        const RatMat& VA = V.alpha[static_cast<size_t>(k)];
        const RatMat& VB = V.beta[static_cast<size_t>(k)];
        for (long long i = 0; i < wd(k + 1); ++i)
            for (long long j = 0; j < vd(k); ++j) {
                long long urow = fa_idx(k, i, j);
                for (long long t = 0; t < wd(k); ++t)
                    if (WA.at(i, t) != 0) D.at(urow, g_idx(k, t, j)) += WA.at(i, t);
                for (long long t = 0; t < vd(k + 1); ++t)
                    if (VA.at(t, j) != 0) D.at(urow, g_idx(k + 1, i, t)) -= VA.at(t, j);
            }
        for (long long i = 0; i < wd(k); ++i)
            for (long long j = 0; j < vd(k + 1); ++j) {
                long long urow = fb_idx(k, i, j);
                for (long long t = 0; t < wd(k + 1); ++t)
                    if (WB.at(i, t) != 0) D.at(urow, g_idx(k + 1, t, j)) += WB.at(i, t);
                for (long long t = 0; t < vd(k); ++t)
                    if (VB.at(t, j) != 0) D.at(urow, g_idx(k, i, t)) -= VB.at(t, j);
            }
    }
    long long dim_coboundaries = D.rank();
    return dim_cocycles - dim_coboundaries;
}

} // namespace detcoh
