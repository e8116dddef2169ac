#ifndef QHECKE_QCONN_HPP
#define QHECKE_QCONN_HPP

#include "qhecke/hecke.hpp"
#include "qhecke/series.hpp"

namespace qhecke {

// Connection operator nabla_lambda = d_lambda - A(q), stored through its
// coroot-lattice-graded coefficient series A.  The beta = 0 term is the
// classical part; quantum corrections carry a factor t and live on positive
// multiples of positive coroots.
struct QOperator {
    QVec lambda;                 // direction of the d-term (empty for a bare series)
    GradedSeries<HeckeElement> A;
};

// Multiplies two Hecke-coefficient series with the algebra's product.
GradedSeries<HeckeElement> series_mult(const HeckeAlgebra &H,
                                       const GradedSeries<HeckeElement> &a,
                                       const GradedSeries<HeckeElement> &b);

// d_lambda applied to the q-dependence: coefficient at beta scales by
// (lambda, beta).
GradedSeries<HeckeElement> apply_derivation(const QVec &lambda,
                                            const GradedSeries<HeckeElement> &a);

// Quantum multiplication by the divisor of lambda:
//   x_lambda + t sum_{alpha>0} (lambda,alpha^vee) sum_{d>=1} q^{d alpha^vee} (s_alpha - 1)
// truncated at height N.
GradedSeries<HeckeElement> divisor_operator(const RootSystem &rs, const QVec &lambda,
                                            int N);
QOperator quantum_connection(const RootSystem &rs, const QVec &lambda, int N);

// Curvature [nabla_lambda, nabla_mu] as a graded series (zero iff flat).
GradedSeries<HeckeElement> curvature(const RootSystem &rs, const QVec &lambda,
                                     const QVec &mu, int N);

// Flatness for all pairs of fundamental weights.
CheckList flatness_check(const RootSystem &rs, int N);

// Conjugation of the connection by w (fiber through the module, base by
// q^beta -> q^{w beta}, geometric series resummed into the positive cone).
// The exact identity is
//   w nabla_lambda w^{-1} = nabla_{w lambda} + t <w lambda - lambda, rho^vee> Id;
// the central scalar comes from the gauge relating this connection to the
// one with plain s_alpha/(q^{alpha^vee}-1) coefficients, which conjugates on
// the nose.  Both statements are verified; the scalar is reported.
struct EquivarianceResult {
    CheckList checks;
    Rational central_scalar; // coefficient of t in the Id-correction
};
EquivarianceResult w_equivariance_check(const RootSystem &rs, int w, const QVec &lambda,
                                        int N);

// Divisor operator in the principal series: series of |W| x |W| matrices
// over Q(a_1..a_r, t).
GradedSeries<Matrix<RatFunc>> divisor_matrix_series(const RootSystem &rs,
                                                    const FiniteModule &M,
                                                    const QVec &lambda, int N);

// Rank-1 classical spectral identity: on M_{a,t} with the geometric series
// summed in closed form, the characteristic polynomial of D_omega is
//   z^2 + 2tQ z - A^2 - t^2 Q,  Q = q/(1-q),  A = <a, omega>,
// equivalently (z + tQ)^2 - t^2 q/(1-q)^2 = A^2.
CheckList cm_spectral_check_rank1();

} // namespace qhecke

#endif
