#include "record.hpp"

namespace powsum::cli {

OutputRecord& OutputRecord::in(std::string key, std::string value) {
    inputs.emplace_back(std::move(key), std::move(value));
    return *this;
}

OutputRecord& OutputRecord::in(std::string key, uint64_t value) {
    return in(std::move(key), std::to_string(value));
}

OutputRecord& OutputRecord::out(std::string key, std::string value) {
    outputs.emplace_back(std::move(key), std::move(value));
    return *this;
}

OutputRecord& OutputRecord::out(std::string key, uint64_t value) {
    return out(std::move(key), std::to_string(value));
}

std::string OutputRecord::line() const {
    std::string text = "command=" + command;
    for (const auto& [key, value] : inputs) {
        text += ' ';
        text += key;
        text += '=';
        text += value;
    }
    text += " result=" + result;
    for (const auto& [key, value] : outputs) {
        text += ' ';
        text += key;
        text += '=';
        text += value;
    }
    if (holds.has_value()) text += *holds ? " holds=true" : " holds=false";
    if (elapsed_ns.has_value()) text += " elapsed_ns=" + std::to_string(*elapsed_ns);
    return text;
}

}  // namespace powsum::cli
