#include <gtest/gtest.h>

#include <random>

#include "sdarcy/sparse.hpp"
#include "support.hpp"

using namespace sdarcy;

TEST(SparseSolver, Identity)
{
    SparseMatrix eye(5, 5);
    eye.setIdentity();
    SparseSolver s;
    s.factor(eye);
    const Vector b = Vector::LinSpaced(5, 1, 5);
    EXPECT_EQ((s.solve(b) - b).cwiseAbs().maxCoeff(), 0.0);
}

TEST(SparseSolver, Diagonal)
{
    SparseSystem sys;
    sys.matrix.resize(2, 2);
    sys.matrix.insert(0, 0) = 2.0;
    sys.matrix.insert(1, 1) = 4.0;
    sys.rhs = Vector(2);
    sys.rhs << 2.0, 8.0;
    sys.offsets = {0, 2};
    const Vector x = sparse_solve(sys);
    EXPECT_DOUBLE_EQ(x[0], 1.0);
    EXPECT_DOUBLE_EQ(x[1], 2.0);
}

TEST(SparseSolver, RandomSpdAgainstDenseOracle)
{
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> u(-1, 1);
    Eigen::MatrixXd a(50, 50);
    for (int i = 0; i < 50; ++i)
        for (int j = 0; j < 50; ++j) a(i, j) = u(rng);
    const Eigen::MatrixXd spd = a * a.transpose() + 50.0 * Eigen::MatrixXd::Identity(50, 50);
    const Eigen::VectorXd b = Eigen::VectorXd::NullaryExpr(50, [&] { return u(rng); });
    SparseSolver s;
    s.factor(spd.sparseView());
    const Vector x = s.solve(b);
    const Vector oracle = sdarcy::testing::gauss_solve(spd, b);
    EXPECT_LE((x - oracle).cwiseAbs().maxCoeff(), 1e-8);
    EXPECT_LE((spd * x - b).norm(), 1e-10 * b.norm());
    // Factor reused for a second right-hand side.
    const Vector x2 = s.solve(2.0 * b);
    EXPECT_LE((x2 - 2.0 * oracle).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(SparseSolver, SingularMatrixReportsError)
{
    SparseMatrix m(3, 3);
    m.insert(0, 0) = 1.0;
    m.insert(1, 1) = 1.0;
    SparseSolver s;
    try {
        s.factor(m);
        FAIL() << "expected SolverError";
    } catch (const SolverError& e) {
        EXPECT_NE(std::string(e.what()).find("3"), std::string::npos) << e.what();
    }
}

TEST(SparseSolver, NonSquareAndUnfactored)
{
    SparseSolver s;
    EXPECT_THROW(s.factor(SparseMatrix(2, 3)), SolverError);
    EXPECT_THROW((void)s.solve(Vector::Zero(2)), SolverError);
}

TEST(SparseSolver, NonFiniteRightHandSide)
{
    SparseMatrix eye(2, 2);
    eye.setIdentity();
    SparseSolver s;
    s.factor(eye);
    Vector b(2);
    b << 1.0, std::nan("");
    EXPECT_THROW((void)s.solve(b), SolverError);
}

TEST(Blocks, AssembleBlocksPlacesAndScales)
{
    SparseMatrix a(2, 2);
    a.insert(0, 1) = 3.0;
    SparseMatrix b(1, 2);
    b.insert(0, 0) = 5.0;
    const std::array<Index, 3> off{0, 2, 3};
    const BlockEntry entries[] = {{0, 0, &a, 1.0}, {1, 0, &b, -2.0}, {0, 1, nullptr, 1.0}};
    const SparseMatrix m = assemble_blocks(off, std::span<const BlockEntry>(entries, 2));
    EXPECT_EQ(m.rows(), 3);
    EXPECT_EQ(m.cols(), 3);
    EXPECT_EQ(m.coeff(0, 1), 3.0);
    EXPECT_EQ(m.coeff(2, 0), -10.0);
    EXPECT_EQ(m.nonZeros(), 2);
    SparseMatrix wrong(3, 3);
    const BlockEntry bad[] = {{0, 0, &wrong, 1.0}};
    EXPECT_THROW(assemble_blocks(off, bad), std::invalid_argument);
}
