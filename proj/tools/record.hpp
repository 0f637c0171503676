#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace powsum::cli {

// One line-delimited output record:
//
//   command=<name> key=value ... result=<decimal> [key=value ...] [holds=...] [elapsed_ns=...]
//
// Values never contain whitespace; exact values and residues are decimal
// strings, so nothing is ever truncated to machine width.
struct OutputRecord {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::string result;
    std::vector<std::pair<std::string, std::string>> outputs;  // computed values beyond result
    std::optional<bool> holds;
    std::optional<uint64_t> elapsed_ns;

    OutputRecord& in(std::string key, std::string value);
    OutputRecord& in(std::string key, uint64_t value);
    OutputRecord& out(std::string key, std::string value);
    OutputRecord& out(std::string key, uint64_t value);

    std::string line() const;
};

}  // namespace powsum::cli
