#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "klab/errors.hpp"

namespace klab {

using Complex = std::complex<double>;
using MatrixXc = Eigen::MatrixXcd;

// Spectral parameter z with Im z > 0; eta = Im z is the spectral resolution.
class SpectralPoint {
public:
    explicit SpectralPoint(Complex z) : z_(z) {
        if (!(z.imag() > 0.0)) throw NotUpperHalfPlane("Im z must be positive");
    }
    SpectralPoint(double re, double im) : SpectralPoint(Complex(re, im)) {}

    Complex z() const { return z_; }
    double eta() const { return z_.imag(); }

private:
    Complex z_;
};

// Dense Green's function G(z) = (H - z)^{-1} together with its defining
// residual max|((H-z)G - I)_{ij}| and the original vertex labels of its rows.
struct GreenMatrix {
    Complex z;
    MatrixXc entries;
    double residual = 0.0;
    std::vector<int> vertices;  // vertices[i] = parent label of row i

    int size() const { return static_cast<int>(entries.rows()); }
    Complex operator()(int i, int j) const { return entries(i, j); }
};

// Solves (A)X = I by LU with one step of iterative refinement; returns X and
// stores the max-norm residual of A*X - I in `residual`.
MatrixXc dense_inverse(const MatrixXc& a, double& residual);

// Eigendecomposition of a real symmetric matrix (ascending eigenvalues).
void symmetric_eigen(const Eigen::MatrixXd& h, Eigen::VectorXd& eigenvalues,
                     Eigen::MatrixXd& eigenvectors, bool want_vectors);

// Dense solver size cap; KLAB_DENSE_CAP overrides the default of 6000.
int dense_cap();

// Caps the BLAS worker pool (useful when parallelizing at the job level).
void set_blas_threads(int threads);

}  // namespace klab
