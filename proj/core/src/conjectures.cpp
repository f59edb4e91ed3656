#include "bispec/conjectures.hpp"

namespace bispec {

namespace {

struct Entry {
    int deg, row, col;
    Rat value;
};

using Direction = std::vector<Entry>;

// Free-parameter directions of the 2x2 family: most parameters occupy a
// dedicated slot; a few also feed coupled lower-left entries at higher
// degree. Degrees above 3 are an arbitrary matrix polynomial.
std::vector<Direction> c1_directions(int deg) {
    std::vector<Direction> dirs = {
        {{0, 0, 0, 1}, {0, 1, 1, 1}},                            // r11_0
        {{0, 0, 1, 1}},                                          // r12_0
        {{1, 0, 0, 1}, {1, 1, 1, 1}, {2, 1, 0, 1}},              // r11_1
        {{1, 0, 1, 1}, {3, 1, 0, -1}},                           // r12_1
        {{2, 0, 0, 1}, {3, 1, 0, 1}},                            // r11_2
        {{2, 0, 1, 1}},                                          // r12_2
        {{2, 1, 1, 1}, {3, 1, 0, 1}},                            // r22_2
        {{3, 0, 0, 1}},                                          // r11_3
        {{3, 0, 1, 1}},                                          // r12_3
        {{3, 1, 1, 1}},                                          // r22_3
    };
    for (int d = 4; d <= deg; ++d)
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) dirs.push_back({{d, r, c, 1}});
    return dirs;
}

std::vector<Direction> c2_directions(int deg) {
    std::vector<Direction> dirs = {
        // degree-0 parameters
        {{0, 0, 0, 1}, {0, 2, 2, 1}, {1, 1, 0, -1}, {1, 2, 1, -1}, {2, 2, 0, -1}},
        {{0, 0, 1, 1}, {1, 2, 2, -1}, {2, 1, 0, 1}, {3, 2, 0, 1}},
        {{0, 0, 2, 1}},
        {{0, 1, 1, 1}, {1, 1, 0, 1}, {1, 2, 1, 1}, {2, 2, 0, 1}},
        {{0, 1, 2, 1}, {1, 2, 2, 1}, {2, 1, 0, -1}, {3, 2, 0, -1}},
        // degree-1 parameters
        {{1, 0, 0, 1}, {1, 2, 2, 1}, {2, 1, 0, -1}, {2, 2, 1, -1}, {3, 2, 0, -2}},
        {{1, 0, 1, 1}, {2, 2, 2, -1}, {4, 2, 0, 1}},
        {{1, 0, 2, 1}, {5, 2, 0, -1}},
        {{1, 1, 1, 1}, {2, 1, 0, 1}, {2, 2, 1, 1}, {3, 2, 0, 1}},
        {{1, 1, 2, 1}, {2, 2, 2, 1}},
        // degree-2 parameters
        {{2, 0, 0, 1}, {2, 2, 2, 1}, {4, 2, 0, -1}},
        {{2, 0, 1, 1}, {5, 2, 0, 1}},
        {{2, 0, 2, 1}},
        {{2, 1, 1, 1}, {4, 2, 0, -1}},
        {{2, 1, 2, 1}, {5, 2, 0, 1}},
        // degree-3 parameters
        {{3, 0, 0, 1}, {5, 2, 0, -1}},
        {{3, 0, 1, 1}},
        {{3, 0, 2, 1}},
        {{3, 1, 0, 1}, {4, 2, 0, 1}},
        {{3, 1, 1, 1}, {5, 2, 0, -1}},
        {{3, 1, 2, 1}},
        {{3, 2, 1, 1}, {4, 2, 0, 1}},
        {{3, 2, 2, 1}, {5, 2, 0, -1}},
        // degree-4 parameters
        {{4, 0, 0, 1}},
        {{4, 0, 1, 1}},
        {{4, 0, 2, 1}},
        {{4, 1, 0, 1}, {5, 2, 0, 1}},
        {{4, 1, 1, 1}},
        {{4, 1, 2, 1}},
        {{4, 2, 1, 1}, {5, 2, 0, 1}},
        {{4, 2, 2, 1}},
        // degree-5 parameters
        {{5, 0, 0, 1}},
        {{5, 0, 1, 1}},
        {{5, 0, 2, 1}},
        {{5, 1, 0, 1}},
        {{5, 1, 1, 1}},
        {{5, 1, 2, 1}},
        {{5, 2, 1, 1}},
        {{5, 2, 2, 1}},
    };
    for (int d = 6; d <= deg; ++d)
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) dirs.push_back({{d, r, c, 1}});
    return dirs;
}

// 2x2 F(z) family: A0 + A1 z + A2 z^2/2 + z^3 P(z) with
// A0 = [[a,0],[b-a,b]], A1 = [[c,c],[a-b-c,-c]], A2 = [[a-b-c,c+a-b],[d,e]].
std::vector<Direction> f3_directions(int deg) {
    const Rat h(1, 2);
    std::vector<Direction> dirs = {
        {{0, 0, 0, 1}, {0, 1, 0, -1}, {1, 1, 0, 1}, {2, 0, 0, h}, {2, 0, 1, h}},   // a
        {{0, 1, 0, 1}, {0, 1, 1, 1}, {1, 1, 0, -1}, {2, 0, 0, -h}, {2, 0, 1, -h}}, // b
        {{1, 0, 0, 1}, {1, 0, 1, 1}, {1, 1, 0, -1}, {1, 1, 1, -1},
         {2, 0, 0, -h}, {2, 0, 1, h}},                                             // c
        {{2, 1, 0, h}},                                                            // d
        {{2, 1, 1, h}},                                                            // e
    };
    for (int d = 3; d <= deg; ++d)
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) dirs.push_back({{d, r, c, 1}});
    return dirs;
}

MatRF direction_matrix(const Direction& dir, int n, Var v, int deg) {
    MatRF m(n, n);
    for (const auto& e : dir) {
        if (e.deg > deg) continue;  // truncation
        Mono mono = v == Var::x ? Mono{e.deg, 0} : Mono{0, e.deg};
        m.at(e.row, e.col) += RatFunc(BiPoly::monomial(mono, Scalar(e.value)));
    }
    return m;
}

}  // namespace

std::vector<MatRF> conjecture_family(Family which, int deg) {
    if (deg < 0) throw DomainError("family degree must be >= 0");
    std::vector<Direction> dirs;
    int n = 2;
    Var v = Var::x;
    switch (which) {
        case Family::C1: dirs = c1_directions(deg); break;
        case Family::C2: dirs = c2_directions(deg); n = 3; break;
        case Family::F3: dirs = f3_directions(deg); v = Var::z; break;
    }
    std::vector<MatRF> basis;
    for (const auto& dir : dirs) {
        MatRF m = direction_matrix(dir, n, v, deg);
        if (!m.is_zero()) basis.push_back(std::move(m));
    }
    return basis;
}

int matrix_poly_degree(const MatRF& m, Var v) {
    int deg = -1;
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            const RatFunc& f = m.at(r, c);
            if (f.is_zero()) continue;
            if (!f.is_polynomial())
                throw DomainError("expected a polynomial matrix");
            deg = std::max(deg, f.num().degree(v));
        }
    return deg;
}

std::string CompareResult::relation_name() const {
    switch (relation) {
        case Relation::equal: return "equal";
        case Relation::computed_subset: return "computed_subset";
        case Relation::conjectured_subset: return "conjectured_subset";
        default: return "incomparable";
    }
}

CompareResult compare_spaces(const SolutionSpace& computed,
                             const std::vector<MatRF>& conjectured) {
    const int n = computed.size;
    const int deg = computed.eigen_deg;
    const Var v = computed.eigen_var;
    for (const auto& m : conjectured) {
        if (m.rows() != n || m.cols() != n)
            throw DimensionError("conjectured family size mismatch");
        if (matrix_poly_degree(m, v) > deg)
            throw DimensionError("conjectured family exceeds the truncation degree");
        if (matrix_poly_degree(m, v == Var::x ? Var::z : Var::x) > 0)
            throw DimensionError("conjectured family in the wrong variable");
    }

    std::vector<ScalarVec> comp_vecs, conj_vecs;
    for (const auto& m : computed.eigen_basis)
        comp_vecs.push_back(eigen_to_vector(m, v, deg));
    for (const auto& m : conjectured)
        conj_vecs.push_back(eigen_to_vector(m, v, deg));
    const int width = (deg + 1) * n * n;

    Rref comp_r = rref(comp_vecs, width);
    Rref conj_r = rref(conj_vecs, width);
    std::vector<ScalarVec> joint = comp_vecs;
    joint.insert(joint.end(), conj_vecs.begin(), conj_vecs.end());
    Rref joint_r = rref(std::move(joint), width);

    CompareResult out;
    out.computed_rank = static_cast<int>(comp_r.rows.size());
    out.conjectured_rank = static_cast<int>(conj_r.rows.size());
    out.joint_rank = static_cast<int>(joint_r.rows.size());

    const bool comp_in_conj = out.joint_rank == out.conjectured_rank;
    const bool conj_in_comp = out.joint_rank == out.computed_rank;
    if (comp_in_conj && conj_in_comp) {
        out.relation = CompareResult::Relation::equal;
        return out;
    }
    if (comp_in_conj)
        out.relation = CompareResult::Relation::computed_subset;
    else if (conj_in_comp)
        out.relation = CompareResult::Relation::conjectured_subset;
    else
        out.relation = CompareResult::Relation::incomparable;

    // Certificate: an element of the larger/other space outside the span.
    if (!conj_in_comp) {
        for (std::size_t i = 0; i < conj_vecs.size(); ++i) {
            if (!in_span(comp_r, conj_vecs[i])) {
                out.certificate = conjectured[i];
                out.certificate_side = "conjectured";
                return out;
            }
        }
    }
    for (std::size_t i = 0; i < comp_vecs.size(); ++i) {
        if (!in_span(conj_r, comp_vecs[i])) {
            out.certificate = computed.eigen_basis[i];
            out.certificate_side = "computed";
            return out;
        }
    }
    return out;
}

ClosureResult algebra_closure_check(const std::vector<MatRF>& family, int deg) {
    ClosureResult out;
    if (family.empty()) return out;
    const int n = family.front().rows();
    Var v = Var::x;
    for (const auto& m : family)
        if (matrix_poly_degree(m, Var::z) > 0) v = Var::z;

    const int width = (deg + 1) * n * n;
    std::vector<ScalarVec> vecs;
    for (const auto& m : family) vecs.push_back(eigen_to_vector(m, v, deg));
    Rref span = rref(std::move(vecs), width);

    std::vector<int> degs;
    for (const auto& m : family) degs.push_back(matrix_poly_degree(m, v));

    const int count = static_cast<int>(family.size());
    for (int i = 0; i < count; ++i) {
        for (int j = 0; j < count; ++j) {
            if (degs[i] + degs[j] > deg) continue;
            MatRF prod = family[i] * family[j];
            if (prod.is_zero()) continue;
            if (!in_span(span, eigen_to_vector(prod, v, deg))) {
                out.closed = false;
                out.witness_indices = {i, j};
                out.witness = prod;
                return out;
            }
        }
    }
    return out;
}

}  // namespace bispec
