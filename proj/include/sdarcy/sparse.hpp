#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Sparse>

#include "sdarcy/mesh.hpp"

namespace sdarcy {

using SparseMatrix = Eigen::SparseMatrix<double>;
using Triplets = std::vector<Eigen::Triplet<double>>;
using Vector = Eigen::VectorXd;

class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Square sparse system with a block layout: block k spans
/// [offsets[k], offsets[k + 1]).
struct SparseSystem {
    SparseMatrix matrix;
    Vector rhs;
    std::vector<Index> offsets;

    void check_consistent() const;
};

/// Builds a matrix from blocks given as (row block, col block, matrix) entries.
struct BlockEntry {
    int row{};
    int col{};
    const SparseMatrix* block{};
    double scale{1.0};
};
SparseMatrix assemble_blocks(std::span<const Index> offsets, std::span<const BlockEntry> entries);

/// Symmetric elimination of essential dofs, split so that the matrix part is
/// done once and the right-hand-side lift can be repeated for each new set of
/// boundary values.
class EssentialElimination {
public:
    EssentialElimination() = default;
    EssentialElimination(const SparseMatrix& matrix, std::vector<Index> dofs);

    /// Matrix with constrained rows and columns replaced by identity rows/columns.
    [[nodiscard]] const SparseMatrix& matrix() const { return reduced_; }
    [[nodiscard]] const std::vector<Index>& dofs() const { return dofs_; }
    /// rhs - A(:, C) g on free rows, g on constrained rows.
    void lift(Vector& rhs, std::span<const double> values) const;

private:
    SparseMatrix reduced_;
    SparseMatrix coupling_;  // A(:, C) with constrained rows removed
    std::vector<Index> dofs_;
};

/// Returns a new system with `dofs` fixed to `values`. Applying it twice gives the same result.
SparseSystem apply_essential_bcs(const SparseSystem& system, std::span<const Index> dofs, std::span<const double> values);

/// Factor-once direct solver. `solve` meets a relative residual of `tolerance`
/// (iterative refinement is used if the first triangular solve falls short)
/// and throws SolverError otherwise.
class SparseSolver {
public:
    explicit SparseSolver(double tolerance = 1e-10) : tolerance_(tolerance) {}

    void factor(const SparseMatrix& matrix);
    [[nodiscard]] Vector solve(const Vector& rhs) const;
    [[nodiscard]] bool factored() const { return factored_; }
    [[nodiscard]] Index size() const { return matrix_.rows(); }

private:
    SparseMatrix matrix_;
    mutable Eigen::SparseLU<SparseMatrix, Eigen::COLAMDOrdering<int>> lu_;
    double tolerance_;
    bool factored_{false};
};

/// One-shot factor and solve of a system.
Vector sparse_solve(const SparseSystem& system, double tolerance = 1e-10);

}  // namespace sdarcy
