#include "klab/green_matrix.hpp"

#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include <cstdlib>
#include <string>

namespace klab {

int dense_cap() {
    static int cap = [] {
        if (const char* env = std::getenv("KLAB_DENSE_CAP")) {
            int v = std::atoi(env);
            if (v > 0) return v;
        }
        return 6000;
    }();
    return cap;
}

extern "C" void openblas_set_num_threads(int);

void set_blas_threads(int threads) { openblas_set_num_threads(threads); }

MatrixXc dense_inverse(const MatrixXc& a, double& residual) {
    const int n = static_cast<int>(a.rows());
    if (n == 0) {
        residual = 0.0;
        return MatrixXc(0, 0);
    }
    MatrixXc lu = a;
    MatrixXc x = MatrixXc::Identity(n, n);
    std::vector<lapack_int> ipiv(n);
    lapack_int info = LAPACKE_zgesv(LAPACK_COL_MAJOR, n, n, lu.data(), n, ipiv.data(),
                                    x.data(), n);
    if (info != 0) throw SolveFailed("zgesv failed, info=" + std::to_string(info));

    // One step of iterative refinement against the factored matrix.
    MatrixXc resid = MatrixXc::Identity(n, n) - a * x;
    MatrixXc corr = resid;
    info = LAPACKE_zgetrs(LAPACK_COL_MAJOR, 'N', n, n, lu.data(), n, ipiv.data(),
                          corr.data(), n);
    if (info != 0) throw SolveFailed("zgetrs failed, info=" + std::to_string(info));
    x += corr;

    residual = (MatrixXc::Identity(n, n) - a * x).cwiseAbs().maxCoeff();
    return x;
}

void symmetric_eigen(const Eigen::MatrixXd& h, Eigen::VectorXd& eigenvalues,
                     Eigen::MatrixXd& eigenvectors, bool want_vectors) {
    const int n = static_cast<int>(h.rows());
    eigenvalues.resize(n);
    if (n == 0) {
        eigenvectors.resize(0, 0);
        return;
    }
    Eigen::MatrixXd work = h;
    lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, want_vectors ? 'V' : 'N', 'L', n,
                                     work.data(), n, eigenvalues.data());
    if (info != 0) throw EigFailed("dsyevd failed, info=" + std::to_string(info));
    if (want_vectors)
        eigenvectors = std::move(work);
    else
        eigenvectors.resize(0, 0);
}

}  // namespace klab
