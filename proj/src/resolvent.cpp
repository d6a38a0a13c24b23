#include "klab/resolvent.hpp"

#include <cmath>
#include <string>

#include <Eigen/Sparse>

#include "klab/tree_green.hpp"

namespace klab {

namespace {

MatrixXc shifted_matrix(const Graph& g, const std::vector<int>& verts, Complex z, int d) {
    if (d < 3) throw DegreeTooLarge("resolvent normalization requires d >= 3");
    const int n = static_cast<int>(verts.size());
    std::vector<int> local_of(g.size(), -1);
    for (int i = 0; i < n; ++i) local_of[verts[i]] = i;
    const double norm = 1.0 / std::sqrt(d - 1.0);
    MatrixXc a = MatrixXc::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int w : g.neighbors(verts[i]))
            if (local_of[w] >= 0) a(i, local_of[w]) = norm;
        a(i, i) -= z;
    }
    return a;
}

GreenMatrix solve_green(const Graph& g, std::vector<int> verts, const SpectralPoint& z, int d) {
    if (static_cast<int>(verts.size()) > dense_cap())
        throw SizeCapExceeded("dense solve of size " + std::to_string(verts.size()) +
                              " exceeds cap " + std::to_string(dense_cap()));
    GreenMatrix out;
    out.z = z.z();
    MatrixXc a = shifted_matrix(g, verts, z.z(), d);
    out.entries = dense_inverse(a, out.residual);
    out.vertices = std::move(verts);
    if (out.residual > 1e-10)
        throw SolveFailed("resolvent residual " + std::to_string(out.residual));
    return out;
}

}  // namespace

GreenMatrix green_full(const Graph& g, const SpectralPoint& z, int d) {
    std::vector<int> verts(g.size());
    for (int v = 0; v < g.size(); ++v) verts[v] = v;
    return solve_green(g, std::move(verts), z, d);
}

GreenMatrix green_minor(const Graph& g, const std::vector<int>& removed,
                        const SpectralPoint& z, int d) {
    std::vector<char> gone(g.size(), 0);
    for (int v : removed) {
        if (v < 0 || v >= g.size()) throw IndexOutOfRange("vertex " + std::to_string(v));
        gone[v] = 1;
    }
    std::vector<int> verts;
    for (int v = 0; v < g.size(); ++v)
        if (!gone[v]) verts.push_back(v);
    return solve_green(g, std::move(verts), z, d);
}

Eigen::VectorXcd green_column(const Graph& g, int column, const SpectralPoint& z, int d) {
    if (column < 0 || column >= g.size()) throw IndexOutOfRange("column vertex");
    if (d < 3) throw DegreeTooLarge("resolvent normalization requires d >= 3");
    const double norm = 1.0 / std::sqrt(d - 1.0);
    std::vector<Eigen::Triplet<Complex>> trip;
    trip.reserve(2 * g.edge_count() + g.size());
    for (int u = 0; u < g.size(); ++u) {
        for (int v : g.neighbors(u)) trip.emplace_back(u, v, Complex(norm, 0.0));
        trip.emplace_back(u, u, -z.z());
    }
    Eigen::SparseMatrix<Complex> a(g.size(), g.size());
    a.setFromTriplets(trip.begin(), trip.end());
    Eigen::SparseLU<Eigen::SparseMatrix<Complex>> lu(a);
    if (lu.info() != Eigen::Success) throw SolveFailed("sparse factorization failed");
    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(g.size());
    rhs[column] = 1.0;
    return lu.solve(rhs);
}

Complex schur_minor_entry(const GreenMatrix& gm, int i, int j, int k) {
    const int n = gm.size();
    if (i < 0 || i >= n || j < 0 || j >= n || k < 0 || k >= n)
        throw IndexOutOfRange("schur_minor_entry index");
    if (i == k || j == k) throw IndexOutOfRange("i,j must differ from k");
    const Complex gkk = gm(k, k);
    if (gkk == Complex(0.0, 0.0)) throw ZeroDiagonal("G_kk = 0 at k=" + std::to_string(k));
    return gm(i, j) - gm(i, k) * gm(k, j) / gkk;
}

double ward_residual(const GreenMatrix& gm) {
    const double eta = gm.z.imag();
    double worst = 0.0;
    for (int i = 0; i < gm.size(); ++i) {
        double s = gm.entries.row(i).cwiseAbs2().sum();
        worst = std::max(worst, std::abs(s - gm(i, i).imag() / eta));
    }
    return worst;
}

QValue q_functional(const Graph& g, const SpectralPoint& z, int d) {
    if (d < 3) throw DegreeTooLarge("q_functional requires d >= 3");
    GreenMatrix gm = green_full(g, z, d);
    Complex sum = 0.0;
    for (int i = 0; i < g.size(); ++i) {
        const Complex gii = gm(i, i);
        if (gii == Complex(0.0, 0.0)) throw ZeroDiagonal("G_ii = 0 at i=" + std::to_string(i));
        for (int j : g.neighbors(i)) sum += gm(j, j) - gm(i, j) * gm(i, j) / gii;
    }
    QValue q;
    q.z = z.z();
    q.n = g.size();
    q.d = d;
    q.q_of_g = sum / (static_cast<double>(g.size()) * d);
    return q;
}

Complex sce_residual(const QValue& q, int ell) {
    SpectralPoint z(q.z);
    const Complex msc = m_sc(z);
    const Complex md = m_d(z, q.d);
    const Complex gap = q.q_of_g - msc;
    const double c = static_cast<double>(q.d - 2) / (q.d - 1);
    return gap - c * md * std::pow(msc, 2 * ell + 1) * gap;
}

Complex sce_residual(const Graph& g, const SpectralPoint& z, int d, int ell) {
    return sce_residual(q_functional(g, z, d), ell);
}

}  // namespace klab
