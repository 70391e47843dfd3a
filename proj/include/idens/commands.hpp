#ifndef IDENS_COMMANDS_HPP
#define IDENS_COMMANDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "idens/report.hpp"

namespace idens {

// Library-level command operations behind the CLI. Parse/input problems
// throw input_error (exit code 2 at the binary); negative results
// (falsified, rejected, failed suite) come back as exit_code 1 in the
// report.
Report cmd_measure(const std::string& set_spec);
Report cmd_phi(const std::string& set_spec);
Report cmd_density(const std::string& set_spec, const std::string& point, long depth);
Report cmd_adens(const std::string& index_spec);
Report cmd_ilimsup(const std::string& seq_spec, const std::string& ideal_spec);
Report cmd_iconv(const std::string& seq_spec, const std::string& ideal_spec,
                 const std::string& limit, const std::string& eps);
Report cmd_idensity(const std::string& set_spec, const std::string& point,
                    const std::string& ideal_spec,
                    const std::vector<std::string>& family_specs, long depth);
Report cmd_sparse_check(const std::string& set_spec, const std::string& point,
                        const std::string& side);
Report cmd_sparse_certify(const std::string& set_spec, const std::string& eps,
                          long depth, const std::string& out_file);
Report cmd_sparse_verify(const std::string& cert_file);
Report cmd_falsify(const std::string& set_spec, const std::string& point,
                   const std::string& ideal_spec, long trials, std::uint64_t seed);
Report cmd_suite(const std::string& name, std::uint64_t seed, long trials, int workers);
Report cmd_reproduce(const std::string& target, const std::string& c, long depth,
                     std::uint64_t seed, long trials);

}  // namespace idens

#endif
