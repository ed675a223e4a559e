#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jnum/cli_result.hpp"
#include "jnum/riley.hpp"

struct RunOptions {
    std::optional<int> root_index;
    std::optional<int> max_len;  // words: root sampling for knot/link, sweep length for verify
};

jnum::CliResult cmd_knot(int p, int q, const RunOptions& o);
jnum::CliResult cmd_link(int p, int q, const RunOptions& o);
jnum::CliResult cmd_bianchi(int d, bool verify);
jnum::CliResult cmd_gtk(int num, int den, double k, const std::string& k_text);
jnum::CliResult cmd_roots(const std::string& poly);
jnum::CliResult cmd_verify(const std::string& suite, const RunOptions& o);

const std::vector<std::string>& suite_names();
