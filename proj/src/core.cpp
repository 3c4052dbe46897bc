#include "knc/core.hpp"

#include <sstream>

namespace knc {

std::vector<int> parse_int_csv(const std::string& text) {
    std::vector<int> out;
    std::string token;
    std::stringstream ss(text);
    while (std::getline(ss, token, ',')) {
        size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(token, &pos);
        } catch (const std::exception&) {
            throw input_error("cannot parse integer '" + token + "'");
        }
        while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
        if (pos != token.size()) throw input_error("cannot parse integer '" + token + "'");
        out.push_back(value);
    }
    if (out.empty() && !text.empty() && text.find_first_not_of(" \t") != std::string::npos)
        throw input_error("cannot parse integer list '" + text + "'");
    return out;
}

std::string format_int_csv(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

}  // namespace knc
