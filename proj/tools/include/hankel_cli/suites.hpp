#ifndef HANKEL_CLI_SUITES_HPP
#define HANKEL_CLI_SUITES_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hankel_cli {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

std::vector<Check> quadrature_suite();
std::vector<Check> lattice_suite(std::uint64_t seed = 1);
std::vector<Check> lemmas_suite();
std::vector<Check> rearrange_suite(std::uint64_t seed = 1);

/// "quadrature", "lattice", "lemmas" or "rearrange"; ConfigError otherwise.
std::vector<Check> run_suite(const std::string& name, std::uint64_t seed = 1);

/// One "PASS name: detail" / "FAIL name: detail" line per check; returns
/// true iff all passed.
bool print_checks(std::ostream& os, const std::vector<Check>& checks);

/// |G(conj phi) - MO(phi)| for phi in {w, w^2, w^3} at probe centers on
/// fock:1 and bergman:0.
struct AntiholomorphicResult {
    double max_error = 0.0;
    int probes = 0;
};
AntiholomorphicResult antiholomorphic_identity(double delta = 0.4, int degree = 24, int probes_per_space = 20);

/// (G(f) + G(conj f)) / MO(f) over the builtin catalog on lattice centers.
/// Probes with MO(f) <= 1e-10 M(f) are skipped.
struct ConjugatePairResult {
    double max_ratio = 0.0;
    double min_ratio = 0.0;
    int probes = 0;
    int skipped = 0;
    double max_g_minus_mo = 0.0;  // max G(f) - MO(f), expected <= 0 up to roundoff
};
ConjugatePairResult conjugate_pair_bound();

} // namespace hankel_cli

#endif
