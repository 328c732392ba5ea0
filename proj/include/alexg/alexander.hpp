#pragma once

// Three routes from an upward crossing list to the normalized invariant:
//   matrix    - determinant of the (2n+1) x (2n+1) presentation matrix
//   gaussian  - transposed bulk contraction of the composed crossing blocks,
//               reciprocal scalar, exponents halved
//   stitch    - the same element folded one leg pair at a time
// All three must agree exactly after normalization.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alexg/diagram.hpp"
#include "alexg/gaussian.hpp"

namespace alexg {

enum class AlexMethod { Matrix, Gaussian, Stitch };

inline const char* method_name(AlexMethod m) {
    switch (m) {
        case AlexMethod::Matrix: return "matrix";
        case AlexMethod::Gaussian: return "gaussian";
        case AlexMethod::Stitch: return "stitch";
    }
    return "?";
}

struct AlexResult {
    LaurentPoly poly;   // normalized invariant
    AlexMethod method = AlexMethod::Matrix;
    LaurentPoly raw;    // pre-normalization (pre-substitution for the
                        // contraction routes)
};

// identity plus, per crossing (s, i, j): (row i, col i+1) = -T^s,
// (row i, col j+1) = T^s - 1, (row j, col j+1) = -1; 1-based labels.
inline Matrix<LaurentPoly> alexander_matrix(const UpwardDiagram& d) {
    const std::size_t n = static_cast<std::size_t>(d.edge_count());
    Matrix<LaurentPoly> a = Matrix<LaurentPoly>::identity(n);
    for (const Crossing& c : d.crossings()) {
        const std::size_t i = static_cast<std::size_t>(c.over_in);
        const std::size_t j = static_cast<std::size_t>(c.under_in);
        const LaurentPoly ts = LaurentPoly::t(c.sign);
        a(i - 1, i) += -ts;
        a(i - 1, j) += ts - LaurentPoly(1);
        a(j - 1, j) += LaurentPoly(-1);
    }
    return a;
}

inline AlexResult alex_via_matrix(const UpwardDiagram& d) {
    const LaurentPoly det_a = det(alexander_matrix(d));
    if (det_a.is_zero()) throw DegenerateError("presentation matrix has zero determinant");
    return AlexResult{normalize(det_a), AlexMethod::Matrix, det_a};
}

// The composed crossing-block element on legs 0..2n+1: per crossing the
// embedded block [[T^2s, 1-T^2s], [0, 1]] at slots (i, j), stored so that
// the descending contraction of its transpose is the diagram's invariant.
inline GaussElem crossing_block_element(const UpwardDiagram& d) {
    const int m = d.edge_count(); // legs 0..m
    const std::size_t total = static_cast<std::size_t>(m) + 1;
    std::vector<int> legs(total);
    for (std::size_t i = 0; i < total; ++i) legs[i] = static_cast<int>(i);

    GaussElem acc = gauss_identity(legs);
    for (const Crossing& c : d.crossings()) {
        Matrix<LaurentPoly> block(2, 2);
        block(0, 0) = LaurentPoly::t(2 * c.sign);
        block(0, 1) = LaurentPoly(1) - LaurentPoly::t(2 * c.sign);
        block(1, 1) = LaurentPoly(1);
        const GaussElem b = gauss_phi(block, {1, 2});
        // slots are 1-based; leg labels are edges 0..m
        const std::vector<std::size_t> slots{static_cast<std::size_t>(c.over_in) + 1,
                                             static_cast<std::size_t>(c.under_in) + 1};
        acc = compose(acc, relabeled(embed(b, slots, total), legs));
    }
    return acc;
}

namespace detail {

inline AlexResult finish_contraction(const LaurentFrac& scalar, AlexMethod method) {
    const LaurentFrac rec = scalar.reciprocal();
    if (!rec.is_polynomial())
        throw Error("contraction scalar is not the reciprocal of a polynomial: " +
                    scalar.str());
    const LaurentPoly raw = rec.as_polynomial();
    return AlexResult{normalize(halve_exponents(raw)), method, raw};
}

} // namespace detail

inline AlexResult alex_via_gaussian(const UpwardDiagram& d) {
    const GaussElem e = crossing_block_element(d);
    const BulkResult bulk = contract_all_transposed(e);
    return detail::finish_contraction(bulk.scalar, AlexMethod::Gaussian);
}

inline AlexResult alex_via_stitch(const UpwardDiagram& d) {
    const GaussElem e = crossing_block_element(d);
    GaussElem folded{e.scalar, e.q.transposed(), e.legs};
    if (folded.legs.size() >= 2) {
        const ContractionPlan plan = descending_plan(folded.legs, folded.legs.front());
        folded = apply_plan(std::move(folded), plan);
    }
    return detail::finish_contraction(folded.scalar, AlexMethod::Stitch);
}

inline AlexResult alex_via(const UpwardDiagram& d, AlexMethod method) {
    switch (method) {
        case AlexMethod::Matrix: return alex_via_matrix(d);
        case AlexMethod::Gaussian: return alex_via_gaussian(d);
        case AlexMethod::Stitch: return alex_via_stitch(d);
    }
    throw Error("unknown method");
}

// --- pipeline comparison ----------------------------------------------------------

struct CompareReport {
    std::optional<AlexResult> matrix;
    std::optional<AlexResult> gaussian;
    std::optional<AlexResult> stitch;
    std::vector<std::string> errors;
    bool all_equal = false;
    bool unimodular_at_one = false; // |value at T = 1| == 1
    bool palindromic = false;       // invariant under T -> T^-1
};

inline CompareReport alex_compare(const UpwardDiagram& d) {
    CompareReport rep;
    auto run = [&](AlexMethod m) -> std::optional<AlexResult> {
        try {
            return alex_via(d, m);
        } catch (const Error& e) {
            rep.errors.push_back(std::string(method_name(m)) + ": " + e.what());
            return std::nullopt;
        }
    };
    rep.matrix = run(AlexMethod::Matrix);
    rep.gaussian = run(AlexMethod::Gaussian);
    rep.stitch = run(AlexMethod::Stitch);
    if (rep.matrix && rep.gaussian && rep.stitch) {
        rep.all_equal = rep.matrix->poly == rep.gaussian->poly &&
                        rep.gaussian->poly == rep.stitch->poly;
    }
    if (rep.matrix) {
        const BigInt at_one = rep.matrix->poly.eval_one();
        rep.unimodular_at_one = at_one == 1 || at_one == -1;
        rep.palindromic =
            normalize(rep.matrix->poly) == normalize(rep.matrix->poly.reversed());
    }
    return rep;
}

} // namespace alexg
