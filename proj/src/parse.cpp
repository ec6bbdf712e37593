#include "fatpoints/parse.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace fatpoints {

namespace {

struct Token {
    std::string text;
    std::size_t position;  // 1-based offset in the input
};

[[noreturn]] void fail(const Token& token, const std::string& reason) {
    throw std::invalid_argument("bad system spec at position " + std::to_string(token.position) + ": " +
                                reason + " ('" + token.text + "')");
}

Int parse_int(const Token& token, const std::string& text) {
    if (text.empty()) fail(token, "empty number");
    std::size_t pos = 0;
    Int value = 0;
    try {
        value = std::stoll(text, &pos);
    } catch (const std::exception&) {
        fail(token, "not an integer");
    }
    if (pos != text.size()) fail(token, "trailing characters in number");
    return value;
}

}  // namespace

LinearSystem parse_system_spec(const std::string& text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) { ++i; continue; }
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        tokens.push_back({text.substr(start, i - start), start + 1});
    }
    if (tokens.empty())
        throw std::invalid_argument("bad system spec at position 1: expected a degree");

    LinearSystem sys;
    sys.degree = parse_int(tokens[0], tokens[0].text);

    for (std::size_t t = 1; t < tokens.size(); ++t) {
        const Token& token = tokens[t];
        const std::size_t caret = token.text.find('^');
        if (caret == std::string::npos) {
            sys.mults.push_back(parse_int(token, token.text));
            continue;
        }
        const Int mult = parse_int(token, token.text.substr(0, caret));
        const Int count = parse_int(token, token.text.substr(caret + 1));
        if (count < 0) fail(token, "negative repeat count");
        if (count > 1000) fail(token, "repeat count too large");
        for (Int c = 0; c < count; ++c) sys.mults.push_back(mult);
    }
    return sys;
}

std::string format_system(const LinearSystem& sys) {
    std::string out = "L(" + std::to_string(sys.degree);
    if (!sys.mults.empty()) out += ";";
    std::size_t i = 0;
    bool first = true;
    while (i < sys.mults.size()) {
        std::size_t run = 1;
        while (i + run < sys.mults.size() && sys.mults[i + run] == sys.mults[i]) ++run;
        out += first ? " " : ",";
        first = false;
        if (run >= 3) {
            out += std::to_string(sys.mults[i]) + "^" + std::to_string(run);
        } else {
            for (std::size_t j = 0; j < run; ++j) {
                if (j > 0) out += ",";
                out += std::to_string(sys.mults[i]);
            }
        }
        i += run;
    }
    out += ")";
    return out;
}

}  // namespace fatpoints
