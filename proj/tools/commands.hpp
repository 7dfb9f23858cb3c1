#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace rumin::cli {

enum class Format { text, latex, json };

struct RunConfig {
    std::string group = "builtin:cartan";
    Format format = Format::text;
    bool paper_basis = false;
    int max_dim = 64;
    std::uint64_t seed = 1;
    std::string golden;
    bool update_golden = false;
};

struct Args {
    std::optional<int> degree;
    std::optional<int> index;
    std::string family;
    std::string theorem;
    std::string convention = "CvS";
    int oracle_pairs = 100;
};

// Each command writes to out and returns the process exit code. Library
// errors propagate to the caller, which maps them to exit code 2.
int cmd_build(const RunConfig& cfg, std::ostream& out);
int cmd_dc(const RunConfig& cfg, const Args& a, std::ostream& out);
int cmd_deltac(const RunConfig& cfg, const Args& a, std::ostream& out);
int cmd_laplacian(const RunConfig& cfg, const Args& a, std::ostream& out);
int cmd_pi_e(const RunConfig& cfg, const Args& a, std::ostream& out);
int cmd_exponents(const RunConfig& cfg, const Args& a, std::ostream& out);
int cmd_tensors(const RunConfig& cfg, const Args& a, std::ostream& out);
int cmd_verify(const RunConfig& cfg, const Args& a, std::ostream& out);

}  // namespace rumin::cli
