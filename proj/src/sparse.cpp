#include "sdarcy/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sdarcy {

void SparseSystem::check_consistent() const
{
    if (matrix.rows() != matrix.cols()) {
        throw std::invalid_argument("system matrix is not square");
    }
    if (rhs.size() != matrix.rows()) {
        throw std::invalid_argument("rhs length " + std::to_string(rhs.size()) + " does not match matrix size " +
                                    std::to_string(matrix.rows()));
    }
    if (!offsets.empty() && (offsets.front() != 0 || offsets.back() != matrix.rows())) {
        throw std::invalid_argument("block layout does not cover the system");
    }
}

SparseMatrix assemble_blocks(std::span<const Index> offsets, std::span<const BlockEntry> entries)
{
    const Index n = offsets.back();
    Triplets triplets;
    for (const auto& e : entries) {
        const Index r0 = offsets[static_cast<std::size_t>(e.row)];
        const Index c0 = offsets[static_cast<std::size_t>(e.col)];
        if (e.block->rows() != offsets[static_cast<std::size_t>(e.row) + 1] - r0 ||
            e.block->cols() != offsets[static_cast<std::size_t>(e.col) + 1] - c0) {
            throw std::invalid_argument("block (" + std::to_string(e.row) + "," + std::to_string(e.col) +
                                        ") has inconsistent dimensions");
        }
        for (int k = 0; k < e.block->outerSize(); ++k) {
            for (SparseMatrix::InnerIterator it(*e.block, k); it; ++it) {
                triplets.emplace_back(static_cast<int>(r0 + it.row()), static_cast<int>(c0 + it.col()), e.scale * it.value());
            }
        }
    }
    SparseMatrix m(n, n);
    m.setFromTriplets(triplets.begin(), triplets.end());
    return m;
}

EssentialElimination::EssentialElimination(const SparseMatrix& matrix, std::vector<Index> dofs) : dofs_(std::move(dofs))
{
    const Index n = matrix.rows();
    std::vector<Index> slot(static_cast<std::size_t>(n), -1);
    for (std::size_t k = 0; k < dofs_.size(); ++k) {
        const Index d = dofs_[k];
        if (d < 0 || d >= n) {
            throw std::invalid_argument("essential dof " + std::to_string(d) + " out of range");
        }
        slot[static_cast<std::size_t>(d)] = static_cast<Index>(k);
    }
    Triplets kept;
    Triplets coupling;
    for (int col = 0; col < matrix.outerSize(); ++col) {
        for (SparseMatrix::InnerIterator it(matrix, col); it; ++it) {
            const bool row_fixed = slot[static_cast<std::size_t>(it.row())] >= 0;
            const Index col_slot = slot[static_cast<std::size_t>(it.col())];
            if (row_fixed) continue;
            if (col_slot >= 0) {
                coupling.emplace_back(static_cast<int>(it.row()), static_cast<int>(col_slot), it.value());
            } else {
                kept.emplace_back(static_cast<int>(it.row()), static_cast<int>(it.col()), it.value());
            }
        }
    }
    for (Index d : dofs_) {
        kept.emplace_back(static_cast<int>(d), static_cast<int>(d), 1.0);
    }
    reduced_.resize(n, n);
    reduced_.setFromTriplets(kept.begin(), kept.end());
    coupling_.resize(n, static_cast<Index>(dofs_.size()));
    coupling_.setFromTriplets(coupling.begin(), coupling.end());
}

void EssentialElimination::lift(Vector& rhs, std::span<const double> values) const
{
    if (values.size() != dofs_.size()) {
        throw std::invalid_argument("got " + std::to_string(values.size()) + " boundary values for " +
                                    std::to_string(dofs_.size()) + " essential dofs");
    }
    if (rhs.size() != reduced_.rows()) {
        throw std::invalid_argument("rhs length does not match the eliminated system");
    }
    const Eigen::Map<const Vector> g(values.data(), static_cast<Index>(values.size()));
    rhs -= coupling_ * g;
    for (std::size_t k = 0; k < dofs_.size(); ++k) {
        rhs[dofs_[k]] = values[k];
    }
}

SparseSystem apply_essential_bcs(const SparseSystem& system, std::span<const Index> dofs, std::span<const double> values)
{
    system.check_consistent();
    EssentialElimination elim(system.matrix, std::vector<Index>(dofs.begin(), dofs.end()));
    SparseSystem out;
    out.matrix = elim.matrix();
    out.rhs = system.rhs;
    out.offsets = system.offsets;
    elim.lift(out.rhs, values);
    return out;
}

void SparseSolver::factor(const SparseMatrix& matrix)
{
    if (matrix.rows() != matrix.cols()) {
        throw SolverError("cannot factor a non-square matrix");
    }
    matrix_ = matrix;
    matrix_.makeCompressed();
    lu_.analyzePattern(matrix_);
    lu_.factorize(matrix_);
    if (lu_.info() != Eigen::Success) {
        std::ostringstream msg;
        msg << "sparse LU factorization failed (n=" << matrix_.rows() << ", nnz=" << matrix_.nonZeros()
            << "): " << lu_.lastErrorMessage();
        throw SolverError(msg.str());
    }
    factored_ = true;
}

Vector SparseSolver::solve(const Vector& rhs) const
{
    if (!factored_) {
        throw SolverError("solve called before factor");
    }
    if (rhs.size() != matrix_.rows()) {
        throw SolverError("rhs length " + std::to_string(rhs.size()) + " does not match factored size " +
                          std::to_string(matrix_.rows()));
    }
    const double bnorm = rhs.norm();
    if (bnorm == 0.0) {
        return Vector::Zero(rhs.size());
    }
    Vector x = lu_.solve(rhs);
    Vector r = rhs - matrix_ * x;
    double rel = r.norm() / bnorm;
    for (int it = 0; it < 3 && rel > tolerance_; ++it) {
        x += lu_.solve(r);
        r = rhs - matrix_ * x;
        rel = r.norm() / bnorm;
    }
    if (!std::isfinite(rel) || rel > tolerance_) {
        std::ostringstream msg;
        msg << "linear solve did not reach tolerance (n=" << matrix_.rows() << ", relative residual " << rel
            << " > " << tolerance_ << ")";
        throw SolverError(msg.str());
    }
    return x;
}

Vector sparse_solve(const SparseSystem& system, double tolerance)
{
    system.check_consistent();
    SparseSolver solver(tolerance);
    solver.factor(system.matrix);
    return solver.solve(system.rhs);
}

}  // namespace sdarcy
