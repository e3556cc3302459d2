#pragma once

namespace agint::specfun {

struct Accuracy {
    double rel_tol = 1e-12;
    int max_terms = 500;
};

// Gamma function, Lanczos approximation with reflection for x < 0.5.
// Throws math_domain_error at the poles (nonpositive integers).
double gamma_fn(double x);

// log |Gamma(x)| for x > 0.
double log_gamma(double x);

// Upper incomplete gamma Gamma(a, x). Valid for any real a when x > 0
// (recurrence lifts a <= 0 into the convergent range); for x == 0
// requires a > 0.
double upper_incomplete_gamma(double a, double x, Accuracy acc = {});

// Lower incomplete gamma gamma(a, x), a > 0, x >= 0.
double lower_incomplete_gamma(double a, double x, Accuracy acc = {});

// Exponential integral E1(x), x > 0. Equals Gamma(0, x).
double exp_integral_e1(double x, Accuracy acc = {});

double erfc_fn(double x);
double erf_fn(double x);

// Airy function Ai. Maclaurin series for x <= 4, asymptotic expansion
// beyond. Negative arguments are outside the supported domain.
double airy_ai(double x);

// Tricomi confluent hypergeometric U(a, b, x) for a > 0, x > 0, via the
// Laplace-type integral representation.
double kummer_u(double a, double b, double x, Accuracy acc = {});

// Solves Gamma(a, t) = y for t. Throws math_domain_error when y lies
// outside the range of Gamma(a, .).
double inverse_upper_gamma(double a, double y, Accuracy acc = {});

}  // namespace agint::specfun
