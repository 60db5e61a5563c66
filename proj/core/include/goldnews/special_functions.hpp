#pragma once

namespace goldnews::stats {

// Regularized incomplete beta I_x(a, b) for a, b > 0 and x in [0, 1],
// evaluated by a modified-Lentz continued fraction on whichever tail
// converges faster. Throws InputError outside the domain.
double regularized_incomplete_beta(double a, double b, double x);

// P(T <= t) for Student's t with dof > 0 degrees of freedom.
double student_t_cdf(double t, double dof);

// P(|T| >= |t|).
double student_t_two_sided_p(double t, double dof);

}  // namespace goldnews::stats
