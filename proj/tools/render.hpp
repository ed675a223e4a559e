#pragma once

#include <string>

#include <json.hpp>

#include "jnum/cli_result.hpp"

void print_human(const jnum::CliResult& r);
void print_csv(const jnum::CliResult& r);
