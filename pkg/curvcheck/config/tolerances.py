# first derivative quantities (Gamma, nabla T)
FD_TOL = 1e-5

# second derivative quantities (Riemann, Laplacians)
SECOND_ORDER_TOL = 1e-4

# a point counts as locally conformally flat when the reconstruction residual is below this
LCF_TOL = 10 * FD_TOL

# Codazzi and harmonicity gates absorb two stacked differentiations
CODAZZI_TOL = 10 * FD_TOL

# eigenvalues of the curvature operator with |lambda| <= this count as zero
EIGEN_ZERO_TOL = 1e-8

# inequality gaps
INEQUALITY_TOL = 1e-10

# relative tolerance for the tracelessness of a field at a point
TRACE_TOL = 1e-6
