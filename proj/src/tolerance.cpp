#include "lie2herm/tolerance.hpp"

namespace lie2herm {

namespace {
double g_tolerance = 1e-9;
}

double tolerance() { return g_tolerance; }

void set_tolerance(double tol) { g_tolerance = tol; }

} // namespace lie2herm
