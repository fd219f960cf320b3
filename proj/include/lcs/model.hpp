#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "lcs/linalg.hpp"

namespace lcs {

// Target potential f with curvature bounds alpha <= Hess f <= beta.
// alpha may be nonpositive (weakly convex or indefinite targets).
// Instances are immutable after construction.
class Potential {
  public:
    virtual ~Potential() = default;

    Eigen::Index dim() const { return dim_; }
    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    const std::optional<Vec>& minimizer() const { return minimizer_; }

    virtual double value_at(const Vec& x) const = 0;
    virtual Vec grad_at(const Vec& x) const = 0;

  protected:
    Potential(Eigen::Index dim, double alpha, double beta,
              std::optional<Vec> minimizer);

  private:
    Eigen::Index dim_;
    double alpha_;
    double beta_;
    std::optional<Vec> minimizer_;
};

// f(x) = (1/2) (x-m)^T Lambda (x-m) with symmetric precision Lambda.
// alpha and beta are the exact extreme eigenvalues of Lambda.
class QuadraticPotential final : public Potential {
  public:
    QuadraticPotential(Mat precision, Vec center);

    // Caller supplies the exact extreme eigenvalues, skipping the
    // eigensolve; for hot paths where the spectrum is known analytically.
    QuadraticPotential(Mat precision, Vec center, double alpha, double beta);

    const Mat& precision() const { return precision_; }
    const Vec& center() const { return center_; }
    bool is_diagonal() const { return diagonal_; }

    double value_at(const Vec& x) const override;
    Vec grad_at(const Vec& x) const override;

  private:
    QuadraticPotential(std::tuple<Mat, double, double> init, Vec center);

    Mat precision_;
    Vec center_;
    Vec diag_;  // fast path when the precision matrix is diagonal
    bool diagonal_;
};

// Arbitrary callables with caller-supplied curvature bounds.  When a
// minimizer is given, values are normalized so value_at(minimizer) == 0 and
// the gradient there must vanish to 1e-8 * (1 + beta * |minimizer|).
class FunctionPotential final : public Potential {
  public:
    FunctionPotential(Eigen::Index dim,
                      std::function<double(const Vec&)> value,
                      std::function<Vec(const Vec&)> grad, double alpha,
                      double beta, std::optional<Vec> minimizer = {});

    double value_at(const Vec& x) const override;
    Vec grad_at(const Vec& x) const override;

  private:
    std::function<double(const Vec&)> value_;
    std::function<Vec(const Vec&)> grad_;
    double offset_ = 0.0;
};

// beta/alpha; requires alpha > 0.
double condition_number(const Potential& p);

// Max over points of |grad - central_fd| / (1 + |grad|), with finite
// difference step cbrt(machine eps) * (1 + |x|).
double grad_check(const Potential& p, const std::vector<Vec>& points);

// Plain-text quadratic: dimension, d*d row-major precision entries, then d
// center entries, whitespace separated.
QuadraticPotential load_quadratic(std::istream& in);
QuadraticPotential load_quadratic_file(const std::string& path);

}  // namespace lcs
