#include "dlpbench/core/call_syntax.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "dlpbench/core/errors.hpp"

namespace dlpbench {

namespace {

std::string clean(std::string_view s, bool lower) {
    std::string out;
    for (char ch : s) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        out.push_back(lower ? static_cast<char>(std::tolower(static_cast<unsigned char>(ch))) : ch);
    }
    return out;
}

}  // namespace

std::optional<std::string> Call::get(std::string_view key) const {
    for (const auto& [k, v] : args) {
        if (k == key) return v;
    }
    return std::nullopt;
}

double Call::number(std::string_view key, double fallback) const {
    const auto v = get(key);
    if (!v) return fallback;
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), out);
    if (ec != std::errc() || ptr != v->data() + v->size()) {
        throw ParseError(name + ": argument " + std::string(key) + "='" + *v + "' is not a number");
    }
    return out;
}

int Call::integer(std::string_view key, int fallback) const {
    const auto v = get(key);
    if (!v) return fallback;
    int out = 0;
    const auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), out);
    if (ec != std::errc() || ptr != v->data() + v->size()) {
        throw ParseError(name + ": argument " + std::string(key) + "='" + *v + "' is not an integer");
    }
    return out;
}

void Call::expect_keys(std::initializer_list<std::string_view> allowed) const {
    for (const auto& [k, v] : args) {
        if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) {
            throw ParseError(name + ": unknown argument '" + k + "'");
        }
    }
}

std::string Call::str() const {
    if (args.empty()) return name;
    std::string out = name + "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) out += ",";
        out += args[i].first + "=" + args[i].second;
    }
    return out + ")";
}

Call parse_call(std::string_view text) {
    const std::string s = clean(text, false);
    Call call;
    const auto open = s.find('(');
    if (open == std::string::npos) {
        call.name = clean(s, true);
        if (call.name.empty()) throw ParseError("empty method term");
        return call;
    }
    if (s.back() != ')') throw ParseError("unbalanced parentheses in '" + s + "'");
    call.name = clean(s.substr(0, open), true);
    if (call.name.empty()) throw ParseError("missing name in '" + s + "'");
    const std::string body = s.substr(open + 1, s.size() - open - 2);
    if (body.empty()) return call;
    std::size_t start = 0;
    while (start <= body.size()) {
        auto comma = body.find(',', start);
        if (comma == std::string::npos) comma = body.size();
        const std::string item = body.substr(start, comma - start);
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
            throw ParseError("argument '" + item + "' in '" + s + "' is not key=value");
        }
        call.args.emplace_back(clean(item.substr(0, eq), true), clean(item.substr(eq + 1), true));
        start = comma + 1;
    }
    return call;
}

}  // namespace dlpbench
