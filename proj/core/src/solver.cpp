#include "bispec/solver.hpp"

#include <map>
#include <tuple>

namespace bispec {

void BAnsatz::validate() const {
    if (max_order < 0) throw DomainError("B ansatz needs max_order >= 0");
    if (laurent_low > 0 || laurent_high < 0 || laurent_low > laurent_high)
        throw DomainError("B ansatz needs laurent_low <= 0 <= laurent_high");
    if (size <= 0) throw DimensionError("B ansatz size must be positive");
}

BAnsatz BAnsatz::doubled() const {
    BAnsatz next = *this;
    next.max_order = std::max(2 * max_order, 1);
    next.laurent_low = laurent_low == 0 ? -1 : 2 * laurent_low;
    return next;
}

void LAnsatz::validate() const {
    if (max_order < 0) throw DomainError("L ansatz needs max_order >= 0");
    if (num_deg < 0) throw DomainError("L ansatz needs num_deg >= 0");
    if (den.is_zero()) throw DomainError("L ansatz denominator must be nonzero");
    if (den.degree(Var::z) > 0)
        throw DomainError("L ansatz denominator must be univariate in x");
    if (size <= 0) throw DimensionError("L ansatz size must be positive");
}

namespace {

RatFunc var_power(Var v, int e) {
    BiPoly p = BiPoly::var(v);
    if (e >= 0) return RatFunc(p.pow(static_cast<unsigned>(e)));
    return RatFunc(BiPoly(Scalar::one()), p.pow(static_cast<unsigned>(-e)));
}

// Coefficient-matching rows for sum_k terms[k] * u_k == rhs (rhs may be
// null for homogeneous systems). One equation per (matrix entry, monomial)
// after clearing each entry's common denominator.
void collect_system(const std::vector<MatRF>& terms, const MatRF* rhs, int n,
                    LinearSystem& sys, ScalarVec* rhs_out) {
    using RowKey = std::tuple<int, int, int, int>;  // (a, b, x-exp, z-exp)
    const int ncols = static_cast<int>(terms.size());
    sys.cols = ncols;

    std::map<RowKey, std::vector<std::pair<int, Scalar>>> entries;
    std::map<RowKey, Scalar> rhs_entries;

    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            BiPoly lcd(Scalar::one());
            for (const auto& t : terms) {
                const RatFunc& f = t.at(a, b);
                if (!f.is_zero()) lcd = BiPoly::lcm(lcd, f.den());
            }
            if (rhs) {
                const RatFunc& f = rhs->at(a, b);
                if (!f.is_zero()) lcd = BiPoly::lcm(lcd, f.den());
            }
            for (int k = 0; k < ncols; ++k) {
                const RatFunc& f = terms[k].at(a, b);
                if (f.is_zero()) continue;
                BiPoly cleared = f.num() * BiPoly::divide_exact(lcd, f.den());
                for (const auto& [m, c] : cleared.terms())
                    entries[RowKey{a, b, m.x, m.z}].emplace_back(k, c);
            }
            if (rhs) {
                const RatFunc& f = rhs->at(a, b);
                if (f.is_zero()) continue;
                BiPoly cleared = f.num() * BiPoly::divide_exact(lcd, f.den());
                for (const auto& [m, c] : cleared.terms())
                    rhs_entries[RowKey{a, b, m.x, m.z}] = c;
            }
        }
    }

    std::map<RowKey, int> row_index;
    for (const auto& [key, cols] : entries)
        row_index.emplace(key, 0);
    for (const auto& [key, c] : rhs_entries)
        row_index.emplace(key, 0);
    int idx = 0;
    for (auto& [key, i] : row_index) i = idx++;

    sys.rows.assign(row_index.size(), ScalarVec(ncols, Scalar::zero()));
    if (rhs_out) rhs_out->assign(row_index.size(), Scalar::zero());
    for (const auto& [key, cols] : entries) {
        ScalarVec& row = sys.rows[row_index[key]];
        for (const auto& [k, c] : cols) row[k] += c;
    }
    if (rhs_out)
        for (const auto& [key, c] : rhs_entries)
            (*rhs_out)[row_index[key]] = c;
}

std::vector<ExpKernel> dz_powers(const ExpKernel& psi, int up_to) {
    std::vector<ExpKernel> d{psi};
    for (int i = 0; i < up_to; ++i) d.push_back(dz(d.back()));
    return d;
}

std::vector<ExpKernel> dx_powers(const ExpKernel& psi, int up_to) {
    std::vector<ExpKernel> d{psi};
    for (int i = 0; i < up_to; ++i) d.push_back(dx(d.back()));
    return d;
}

// Column for the B unknown (i, e, r, c): D_i * (z^e E_rc); only column c
// is nonzero and equals z^e times column r of D_i.
MatRF b_column(const MatRF& di, int n, int e, int r, int c) {
    MatRF t(n, n);
    const RatFunc zp = var_power(Var::z, e);
    for (int a = 0; a < n; ++a) {
        const RatFunc& src = di.at(a, r);
        if (!src.is_zero()) t.at(a, c) = src * zp;
    }
    return t;
}

std::vector<MatRF> b_columns(const std::vector<ExpKernel>& d, const BAnsatz& an) {
    std::vector<MatRF> cols;
    for (int i = 0; i <= an.max_order; ++i)
        for (int e = an.laurent_low; e <= an.laurent_high; ++e)
            for (int r = 0; r < an.size; ++r)
                for (int c = 0; c < an.size; ++c)
                    cols.push_back(b_column(d[i].m(), an.size, e, r, c));
    return cols;
}

DiffOp decode_b(const ScalarVec& v, std::size_t offset, const BAnsatz& an) {
    DiffOp b(Side::right, an.size);
    std::size_t k = offset;
    for (int i = 0; i <= an.max_order; ++i) {
        MatRF coeff(an.size, an.size);
        bool nonzero = false;
        for (int e = an.laurent_low; e <= an.laurent_high; ++e)
            for (int r = 0; r < an.size; ++r)
                for (int c = 0; c < an.size; ++c) {
                    const Scalar& s = v[k++];
                    if (s.is_zero()) continue;
                    coeff.at(r, c) += RatFunc(s) * var_power(Var::z, e);
                    nonzero = true;
                }
        if (nonzero) b.set_coeff(i, coeff);
    }
    return b;
}

DiffOp decode_l(const ScalarVec& v, std::size_t offset, const LAnsatz& an) {
    DiffOp l(Side::left, an.size);
    const RatFunc den_inv = RatFunc(BiPoly(Scalar::one()), an.den);
    std::size_t k = offset;
    for (int i = 0; i <= an.max_order; ++i) {
        MatRF num(an.size, an.size);
        bool nonzero = false;
        for (int d = 0; d <= an.num_deg; ++d)
            for (int r = 0; r < an.size; ++r)
                for (int c = 0; c < an.size; ++c) {
                    const Scalar& s = v[k++];
                    if (s.is_zero()) continue;
                    num.at(r, c) += RatFunc(BiPoly::monomial(Mono{d, 0}, s));
                    nonzero = true;
                }
        if (nonzero) l.set_coeff(i, num.scale(den_inv));
    }
    return l;
}

}  // namespace

MatRF eigen_from_vector(const ScalarVec& v, Var var, int size, int deg) {
    MatRF m(size, size);
    std::size_t k = 0;
    for (int d = 0; d <= deg; ++d)
        for (int r = 0; r < size; ++r)
            for (int c = 0; c < size; ++c) {
                const Scalar& s = v[k++];
                if (!s.is_zero())
                    m.at(r, c) += RatFunc(BiPoly::monomial(
                        var == Var::x ? Mono{d, 0} : Mono{0, d}, s));
            }
    return m;
}

ScalarVec eigen_to_vector(const MatRF& m, Var var, int deg) {
    const int n = m.rows();
    ScalarVec v(static_cast<std::size_t>(deg + 1) * n * n, Scalar::zero());
    std::size_t k = 0;
    for (int d = 0; d <= deg; ++d)
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                const RatFunc& f = m.at(r, c);
                if (!f.is_polynomial())
                    throw DomainError("eigenvalue entries must be polynomial");
                v[k++] = f.num().coeff(var == Var::x ? Mono{d, 0} : Mono{0, d});
            }
    return v;
}

AssembledSystem assemble_theta_system(const ExpKernel& psi, int theta_deg,
                                      const BAnsatz& ansatz) {
    ansatz.validate();
    if (ansatz.size != psi.size())
        throw DimensionError("ansatz size does not match the function size");
    if (theta_deg < 0) throw DomainError("theta degree must be >= 0");
    const int n = psi.size();

    std::vector<MatRF> cols;
    // Theta unknowns: -(x^d E_rc) Psi; row r is -x^d times row c of M.
    for (int d = 0; d <= theta_deg; ++d) {
        const RatFunc xp = var_power(Var::x, d);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                MatRF t(n, n);
                for (int b = 0; b < n; ++b) {
                    const RatFunc& src = psi.m().at(c, b);
                    if (!src.is_zero()) t.at(r, b) = -(xp * src);
                }
                cols.push_back(std::move(t));
            }
    }
    const int eigen_unknowns = static_cast<int>(cols.size());
    auto d = dz_powers(psi, ansatz.max_order);
    for (auto& col : b_columns(d, ansatz)) cols.push_back(std::move(col));

    AssembledSystem out;
    out.eigen_unknowns = eigen_unknowns;
    collect_system(cols, nullptr, n, out.sys, nullptr);
    return out;
}

AssembledSystem assemble_f_system(const ExpKernel& psi, int f_deg,
                                  const LAnsatz& ansatz) {
    ansatz.validate();
    if (ansatz.size != psi.size())
        throw DimensionError("ansatz size does not match the function size");
    if (f_deg < 0) throw DomainError("F degree must be >= 0");
    const int n = psi.size();

    std::vector<MatRF> cols;
    // F unknowns: -Psi (z^g E_rc); column c is -z^g times column r of M.
    for (int g = 0; g <= f_deg; ++g) {
        const RatFunc zp = var_power(Var::z, g);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                MatRF t(n, n);
                for (int a = 0; a < n; ++a) {
                    const RatFunc& src = psi.m().at(a, r);
                    if (!src.is_zero()) t.at(a, c) = -(zp * src);
                }
                cols.push_back(std::move(t));
            }
    }
    const int eigen_unknowns = static_cast<int>(cols.size());

    auto d = dx_powers(psi, ansatz.max_order);
    const RatFunc den_inv = RatFunc(BiPoly(Scalar::one()), ansatz.den);
    // L unknowns: (x^k/den) E_rc D_i; row r is the scaled row c of D_i.
    for (int i = 0; i <= ansatz.max_order; ++i)
        for (int k = 0; k <= ansatz.num_deg; ++k) {
            const RatFunc f = var_power(Var::x, k) * den_inv;
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) {
                    MatRF t(n, n);
                    for (int b = 0; b < n; ++b) {
                        const RatFunc& src = d[i].m().at(c, b);
                        if (!src.is_zero()) t.at(r, b) = f * src;
                    }
                    cols.push_back(std::move(t));
                }
        }

    AssembledSystem out;
    out.eigen_unknowns = eigen_unknowns;
    collect_system(cols, nullptr, n, out.sys, nullptr);
    return out;
}

namespace {

std::vector<MatRF> eigen_projection_basis(const std::vector<ScalarVec>& vecs,
                                          int eigen_unknowns, Var var, int size,
                                          int deg) {
    std::vector<ScalarVec> proj;
    proj.reserve(vecs.size());
    for (const auto& v : vecs)
        proj.emplace_back(v.begin(), v.begin() + eigen_unknowns);
    Rref r = rref(std::move(proj), eigen_unknowns);
    std::vector<MatRF> basis;
    basis.reserve(r.rows.size());
    for (const auto& row : r.rows)
        basis.push_back(eigen_from_vector(row, var, size, deg));
    return basis;
}

}  // namespace

SolutionSpace solve_theta_space(const ExpKernel& psi, int theta_deg,
                                const BAnsatz& ansatz) {
    AssembledSystem as = assemble_theta_system(psi, theta_deg, ansatz);
    auto kernel = nullspace(as.sys);

    SolutionSpace out;
    out.eigen_var = Var::x;
    out.size = psi.size();
    out.eigen_deg = theta_deg;
    for (const auto& v : kernel) {
        ScalarVec tv(v.begin(), v.begin() + as.eigen_unknowns);
        MatRF theta = eigen_from_vector(tv, Var::x, psi.size(), theta_deg);
        DiffOp b = decode_b(v, as.eigen_unknowns, ansatz);
        // Soundness: every returned pair satisfies the defining identity.
        if (apply_right(psi, b) != mult_left(theta, psi))
            throw Error("internal: solver produced an unsound pair");
        out.basis.emplace_back(std::move(theta), std::move(b));
    }
    out.eigen_basis = eigen_projection_basis(kernel, as.eigen_unknowns, Var::x,
                                             psi.size(), theta_deg);
    return out;
}

SolutionSpace solve_f_space(const ExpKernel& psi, int f_deg,
                            const LAnsatz& ansatz) {
    AssembledSystem as = assemble_f_system(psi, f_deg, ansatz);
    auto kernel = nullspace(as.sys);

    SolutionSpace out;
    out.eigen_var = Var::z;
    out.size = psi.size();
    out.eigen_deg = f_deg;
    for (const auto& v : kernel) {
        ScalarVec fv(v.begin(), v.begin() + as.eigen_unknowns);
        MatRF f = eigen_from_vector(fv, Var::z, psi.size(), f_deg);
        DiffOp l = decode_l(v, as.eigen_unknowns, ansatz);
        if (apply_left(l, psi) != mult_right(psi, f))
            throw Error("internal: solver produced an unsound pair");
        out.basis.emplace_back(std::move(f), std::move(l));
    }
    out.eigen_basis = eigen_projection_basis(kernel, as.eigen_unknowns, Var::z,
                                             psi.size(), f_deg);
    return out;
}

std::optional<DiffOp> solve_b_for_theta(const ExpKernel& psi, const MatRF& theta,
                                        const BAnsatz& ansatz) {
    ansatz.validate();
    if (!theta.univariate_in(Var::x))
        throw DomainError("theta must be a polynomial matrix in x");
    if (theta.rows() != psi.size() || theta.cols() != psi.size())
        throw DimensionError("theta size does not match the function size");

    auto d = dz_powers(psi, ansatz.max_order);
    std::vector<MatRF> cols = b_columns(d, ansatz);
    MatRF rhs = theta * psi.m();

    LinearSystem sys;
    ScalarVec rhs_vec;
    collect_system(cols, &rhs, psi.size(), sys, &rhs_vec);
    auto sol = solve(sys, rhs_vec);
    if (!sol) return std::nullopt;
    DiffOp b = decode_b(*sol, 0, ansatz);
    if (apply_right(psi, b) != mult_left(theta, psi))
        throw Error("internal: inconsistent solution for B");
    return b;
}

std::optional<DiffOp> solve_b_for_theta_escalating(const ExpKernel& psi,
                                                   const MatRF& theta,
                                                   BAnsatz start, int max_rounds,
                                                   BAnsatz* bounds_used) {
    BAnsatz cur = start;
    for (int round = 0; round <= max_rounds; ++round) {
        auto b = solve_b_for_theta(psi, theta, cur);
        if (b) {
            if (bounds_used) *bounds_used = cur;
            return b;
        }
        if (bounds_used) *bounds_used = cur;  // last bounds actually tried
        cur = cur.doubled();
    }
    return std::nullopt;
}

SolutionSpace solve_theta_space_escalating(const ExpKernel& psi, int theta_deg,
                                           BAnsatz start, int max_rounds,
                                           BAnsatz* bounds_used) {
    BAnsatz cur = start;
    SolutionSpace space = solve_theta_space(psi, theta_deg, cur);
    for (int round = 0; round < max_rounds; ++round) {
        BAnsatz next = cur.doubled();
        SolutionSpace bigger = solve_theta_space(psi, theta_deg, next);
        if (bigger.eigen_dim() == space.eigen_dim()) {
            cur = next;
            space = std::move(bigger);
            break;
        }
        cur = next;
        space = std::move(bigger);
    }
    if (bounds_used) *bounds_used = cur;
    return space;
}

}  // namespace bispec
