#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "lieco/invariants.hpp"

namespace lieco {

struct Ambient {
    std::string tag;
    const std::vector<ExactMatrix>* basis;
};

inline Ambient ambient_g(const AlgebraContext& c) { return {"g", &c.basis}; }
inline Ambient ambient_k(const AlgebraContext& c) { return {"k", &c.k_basis}; }
inline Ambient ambient_level(const AlgebraContext& c, std::size_t m) {
    return {"g_" + std::to_string(m), &c.level(m).basis};
}

struct CentralizerBasis {
    std::string ambient;
    std::vector<ExactMatrix> vectors;
    std::size_t dim() const { return vectors.size(); }
    bool empty() const { return vectors.empty(); }
};

// {y in span(ambient) : [y, e] = 0 for every listed e}, as one stacked nullspace.
inline CentralizerBasis joint_centralizer(const std::vector<ExactMatrix>& elements, const Ambient& amb) {
    const auto& B = *amb.basis;
    CentralizerBasis out{amb.tag, {}};
    if (B.empty()) return out;
    if (elements.empty()) {
        out.vectors = B;
        return out;
    }
    const std::size_t n = B[0].rows();
    std::vector<std::vector<ExactMatrix>> brackets(B.size());
    for (std::size_t j = 0; j < B.size(); ++j)
        for (const auto& e : elements) brackets[j].push_back(bracket(B[j], e));
    // keep only rows that are not identically zero
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> rows;
    for (std::size_t t = 0; t < elements.size(); ++t)
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                bool nz = false;
                for (std::size_t j = 0; j < B.size() && !nz; ++j) nz = !brackets[j][t](p, q).is_zero();
                if (nz) rows.emplace_back(t, p, q);
            }
    ExactMatrix m(rows.size(), B.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        auto [t, p, q] = rows[r];
        for (std::size_t j = 0; j < B.size(); ++j) m(r, j) = brackets[j][t](p, q);
    }
    for (const auto& v : nullspace(std::move(m))) {
        ExactMatrix y(n, n);
        for (std::size_t j = 0; j < B.size(); ++j)
            if (!v[j].is_zero()) y += B[j] * v[j];
        out.vectors.push_back(std::move(y));
    }
    return out;
}

inline CentralizerBasis joint_centralizer(const AlgebraContext&, const std::vector<ExactMatrix>& elements, const Ambient& amb) {
    return joint_centralizer(elements, amb);
}

inline CentralizerBasis centralizer(const AlgebraContext&, const ExactMatrix& x, const Ambient& amb) {
    return joint_centralizer({x}, amb);
}

// z_k(x_k) ∩ z_g(x)
inline CentralizerBasis nsreg_intersection(const AlgebraContext& c, const ExactMatrix& x) {
    return joint_centralizer({project_to_level(c, x, c.n - 1), x}, ambient_k(c));
}

inline bool is_nsreg(const AlgebraContext& c, const ExactMatrix& x) { return nsreg_intersection(c, x).empty(); }

inline bool is_regular(const AlgebraContext& c, const ExactMatrix& x, std::size_t m) {
    ExactMatrix xm = project_to_level(c, x, m);
    return centralizer(c, xm, ambient_level(c, m)).dim() == c.rank_at(m);
}

// Stabilizer of x in k: z_k(x)
inline CentralizerBasis k_stabilizer(const AlgebraContext& c, const ExactMatrix& x) {
    return centralizer(c, x, ambient_k(c));
}

// Rows: gradients of the generator functions, columns: the g-basis.
template <class F>
ExactMatrix jacobian(const AlgebraContext& c, const ExactMatrix& x, F&& generators) {
    using J = Jet<Scalar>;
    Matrix<J> X(c.n, c.n);
    for (std::size_t i = 0; i < c.n; ++i)
        for (std::size_t j = 0; j < c.n; ++j) X(i, j) = J(x(i, j));
    ExactMatrix jac;
    for (std::size_t b = 0; b < c.dim(); ++b) {
        Matrix<J> Xb = X;
        const ExactMatrix& dir = c.basis[b];
        for (std::size_t i = 0; i < c.n; ++i)
            for (std::size_t j = 0; j < c.n; ++j)
                if (!dir(i, j).is_zero()) Xb(i, j).d = dir(i, j);
        std::vector<J> vals = generators(Xb);
        if (b == 0) jac = ExactMatrix(vals.size(), c.dim());
        for (std::size_t r = 0; r < vals.size(); ++r) jac(r, b) = vals[r].d;
    }
    return jac;
}

inline ExactMatrix kostant_jacobian(const AlgebraContext& c, const ExactMatrix& x) {
    return jacobian(c, x, [&](const Matrix<Jet<Scalar>>& X) { return partial_kw_values(c, X); });
}

inline std::size_t kostant_jacobian_rank(const AlgebraContext& c, const ExactMatrix& x) { return rank(kostant_jacobian(c, x)); }

inline ExactMatrix full_jacobian(const AlgebraContext& c, const ExactMatrix& x) {
    return jacobian(c, x, [&](const Matrix<Jet<Scalar>>& X) { return full_kw_values(c, X); });
}

inline std::size_t full_jacobian_rank(const AlgebraContext& c, const ExactMatrix& x) { return rank(full_jacobian(c, x)); }

// z_{g_i}(x_i) ∩ z_{g_{i+1}}(x_{i+1}) = 0
inline bool chain_condition(const AlgebraContext& c, const ExactMatrix& x, std::size_t i) {
    ExactMatrix xi = project_to_level(c, x, i);
    ExactMatrix xi1 = project_to_level(c, x, i + 1);
    return joint_centralizer({xi, xi1}, ambient_level(c, i)).empty();
}

inline bool is_sreg(const AlgebraContext& c, const ExactMatrix& x) {
    for (std::size_t i = c.first_level(); i < c.n; ++i)
        if (!chain_condition(c, x, i)) return false;
    return true;
}

// every x_i regular in g_i
inline bool chain_regular(const AlgebraContext& c, const ExactMatrix& x) {
    for (std::size_t m = c.first_level(); m <= c.n; ++m)
        if (!is_regular(c, x, m)) return false;
    return true;
}

}  // namespace lieco
