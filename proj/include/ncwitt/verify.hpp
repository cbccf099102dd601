#ifndef NCWITT_VERIFY_HPP
#define NCWITT_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <ncwitt/sampling.hpp>

namespace ncwitt
{

struct verify_options {
    unsigned p = 2;
    // Truncation length used by the counterexample check.
    std::size_t level = 2;
    std::uint64_t seed = default_seed;
    // Run independent checks on separate threads.
    bool parallel = true;
};

struct check_result {
    std::string id;
    // The statement being checked.
    std::string anchor;
    bool passed = false;
    std::size_t cases = 0;
    std::string details;
    double seconds = 0.0;
};

struct verify_report {
    std::vector<check_result> checks;
    bool passed = true;
};

// Identifiers of the available checks, in report order.
const std::vector<std::string> &check_ids();
bool is_check_id(std::string_view id);

// Runs one check. Unknown ids throw std::invalid_argument. Library errors raised
// inside a check are reported as a failure of that check.
check_result run_check(std::string_view id, const verify_options &opts);
// Runs the selected checks; the report lists them in the order given.
verify_report run_verify(const std::vector<std::string> &ids, const verify_options &opts);

} // namespace ncwitt

#endif
