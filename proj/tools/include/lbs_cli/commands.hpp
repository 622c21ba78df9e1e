#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <lbs/classifier.hpp>
#include <lbs/model.hpp>
#include <lbs/oracle.hpp>
#include <lbs/solver.hpp>

namespace lbs::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_disagreement = 3;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Range {
    double lo = 0.0;
    double hi = 1.0;
    int steps = 2;

    double at(int i) const;
};

// Parses "lo:hi:n"; requires lo < hi and n >= 2.
Range parse_range(const std::string& text);

enum class Plane { lambda_mu, gamma_lambda, gamma_mu };

Plane parse_plane(const std::string& text);
const char* to_string(Plane p) noexcept;

enum class ScanMode { classify, solve };

struct ScanSpec {
    Plane plane = Plane::lambda_mu;
    // Value of the coupling not spanned by the plane.
    double fixed_value = 0.0;
    Range range1;
    Range range2;
    Quasimomentum k;
    ScanMode mode = ScanMode::classify;

    void validate() const;
    Couplings point(double x, double y) const;
};

enum class SolveMethod { det, oracle, both };

SolveMethod parse_method(const std::string& text);

struct Settings {
    SolverOptions solver;
    DiscretizationConfig oracle;
    BoundaryTolerance boundary;
};

int cmd_classify(const Couplings& c, const Settings& s, std::ostream& out);

int cmd_solve(const Couplings& c, const Quasimomentum& k, SolveMethod method, const Settings& s,
              std::ostream& out);

// Writes the CSV for a plane scan. Rows follow the grid in row-major order with the
// first range outermost, independent of how many workers evaluate the points.
void write_scan(const ScanSpec& spec, const Settings& s, std::ostream& out);
int cmd_scan(const ScanSpec& spec, const Settings& s, const std::string& out_path,
             std::ostream& log);

int cmd_sweep(const Couplings& c, const std::vector<Quasimomentum>& ks, const Settings& s,
              std::ostream& out);

// Runs every invariant suite on seeded samples and prints one line per check.
int cmd_verify(std::uint64_t seed, int samples, const Settings& s, std::ostream& out);

}  // namespace lbs::cli
