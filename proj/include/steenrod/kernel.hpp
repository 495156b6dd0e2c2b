#pragma once

// Common kernels of a lowering family, solved degree by degree as nullspaces
// of stacked constraint matrices, and the dual picture: the span hit by the
// raised (adjoint) operators and its quotient.

#include <steenrod/families.hpp>
#include <steenrod/hilbert.hpp>
#include <steenrod/linalg.hpp>

#include <map>

namespace steenrod {

/// two_generator restricts to k <= 2; valid whenever brackets of the first
/// two members generate the rest.  automatic picks that whenever the family
/// says it may.
enum class KernelMode { automatic, two_generator, all_members };

template <class S>
std::vector<S> poly_to_vec(const MultiPoly<S>& p, const std::vector<ExpVec>& mons) {
    std::map<ExpVec, std::size_t, GrlexDesc> index;
    for (std::size_t i = 0; i < mons.size(); ++i) index.emplace(mons[i], i);
    std::vector<S> v(mons.size(), S{});
    for (const auto& [e, c] : p.terms()) {
        auto it = index.find(e);
        if (it == index.end()) throw std::invalid_argument("poly_to_vec: monomial outside basis");
        v[it->second] = c;
    }
    return v;
}

template <class S>
MultiPoly<S> vec_to_poly(const std::vector<S>& v, const std::vector<ExpVec>& mons, int nv) {
    MultiPoly<S> p(nv);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) p.add_term(mons[i], v[i]);
    return p;
}

template <class S>
struct GradedKernel {
    int nv = 0;
    std::vector<std::vector<MultiPoly<S>>> graded;  // graded[d] = basis in degree d

    int dim(int d) const {
        if (d < 0 || d >= static_cast<int>(graded.size())) return 0;
        return static_cast<int>(graded[d].size());
    }
    Integer total() const {
        Integer t = 0;
        for (const auto& g : graded) t += static_cast<long>(g.size());
        return t;
    }
    UPoly hilbert() const {
        std::vector<Rational> c;
        for (const auto& g : graded) c.emplace_back(static_cast<long>(g.size()));
        return UPoly(c);
    }
};

namespace detail {

inline bool use_two_generator(bool bracket_closed, KernelMode mode) {
    switch (mode) {
        case KernelMode::automatic: return bracket_closed;
        case KernelMode::two_generator:
            if (!bracket_closed)
                throw std::invalid_argument("two_generator mode needs a bracket-closed family");
            return true;
        case KernelMode::all_members: return false;
    }
    return false;
}

}  // namespace detail

/// Stacked rows expressing "every member listed for this degree kills f" in
/// the monomial basis of the degree-d component.
template <class S>
std::vector<std::vector<S>> kernel_constraint_rows(const OperatorFamily<S>& fam, int degree,
                                                   bool two_generator) {
    auto mons = monomials_of_degree(fam.nv, degree);
    std::vector<std::vector<S>> rows;
    for (int k : fam.ks_for_degree(degree, two_generator)) {
        auto D = fam.member(k);
        std::map<ExpVec, std::size_t, GrlexDesc> target;
        std::vector<std::vector<S>> local;
        for (std::size_t j = 0; j < mons.size(); ++j) {
            auto img = D.apply(MultiPoly<S>::monomial(fam.nv, mons[j], scalar_one<S>()));
            for (const auto& [e, c] : img.terms()) {
                auto it = target.find(e);
                if (it == target.end()) {
                    it = target.emplace(e, local.size()).first;
                    local.emplace_back(mons.size(), S{});
                }
                local[it->second][j] = c;
            }
        }
        for (auto& r : local) rows.push_back(std::move(r));
    }
    return rows;
}

template <class S>
GradedKernel<S> solve_kernel(const OperatorFamily<S>& fam, int max_degree,
                             KernelMode mode = KernelMode::automatic) {
    bool two_gen = detail::use_two_generator(fam.bracket_closed, mode);
    GradedKernel<S> out;
    out.nv = fam.nv;
    out.graded.resize(max_degree + 1);
    for (int d = 0; d <= max_degree; ++d) {
        auto mons = monomials_of_degree(fam.nv, d);
        auto rows = kernel_constraint_rows(fam, d, two_gen);
        auto vecs = kernel_basis<S>(rows, static_cast<int>(mons.size()));
        for (const auto& v : vecs) out.graded[d].push_back(vec_to_poly(v, mons, fam.nv));
    }
    return out;
}

/// Rows spanning the degree-d polynomials reachable by applying raised
/// members to lower degrees.
template <class S>
std::vector<std::vector<S>> hit_rows(const OperatorFamily<S>& fam, int degree,
                                     bool two_generator) {
    auto mons = monomials_of_degree(fam.nv, degree);
    std::vector<std::vector<S>> rows;
    for (int k : fam.ks_for_degree(degree, two_generator)) {
        auto raised = fam.member(k).dual();
        for (const auto& src : monomials_of_degree(fam.nv, degree - k)) {
            auto img = raised.apply(MultiPoly<S>::monomial(fam.nv, src, scalar_one<S>()));
            rows.push_back(poly_to_vec(img, mons));
        }
    }
    return rows;
}

/// dim of each graded piece of (polynomials) / (hit span).
template <class S>
std::vector<int> hit_quotient_dims(const OperatorFamily<S>& fam, int max_degree,
                                   KernelMode mode = KernelMode::automatic) {
    bool two_gen = detail::use_two_generator(fam.bracket_closed, mode);
    std::vector<int> dims;
    for (int d = 0; d <= max_degree; ++d) {
        int full = static_cast<int>(monomials_of_degree(fam.nv, d).size());
        auto rows = hit_rows(fam, d, two_gen);
        dims.push_back(full - rank_rows<S>(rows, full));
    }
    return dims;
}

/// Coefficients of f in the degree-d kernel basis, if f lies in its span.
template <class S>
std::optional<std::vector<S>> in_kernel_span(const GradedKernel<S>& ker, int d,
                                             const MultiPoly<S>& f) {
    if (d < 0 || d >= static_cast<int>(ker.graded.size()))
        throw std::invalid_argument("in_kernel_span: degree out of range");
    auto mons = monomials_of_degree(ker.nv, d);
    std::vector<std::vector<S>> rows;
    for (const auto& b : ker.graded[d]) rows.push_back(poly_to_vec(b, mons));
    auto piv = rref_field(rows, static_cast<int>(mons.size()));
    return solve_in_span(rows, piv, poly_to_vec(f, mons));
}

}  // namespace steenrod
