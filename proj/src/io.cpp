#include "mstd/io.hpp"

#include <cctype>
#include <charconv>

namespace mstd {

std::string format_set(const IntSet& a) {
    std::string out = "{";
    bool first = true;
    a.for_each([&](std::int64_t v) {
        if (!first) {
            out += ',';
        }
        out += std::to_string(v);
        first = false;
    });
    out += '}';
    return out;
}

IntSet parse_set(const std::string& text) {
    std::size_t lo = 0;
    std::size_t hi = text.size();
    while (lo < hi && std::isspace(static_cast<unsigned char>(text[lo]))) {
        ++lo;
    }
    while (hi > lo && std::isspace(static_cast<unsigned char>(text[hi - 1]))) {
        --hi;
    }
    if (lo < hi && text[lo] == '{') {
        if (text[hi - 1] != '}') {
            throw parameter_error("set literal: unbalanced braces in \"" + text + "\"");
        }
        ++lo;
        --hi;
    }
    std::vector<std::int64_t> vals;
    std::size_t pos = lo;
    while (pos < hi) {
        while (pos < hi && (std::isspace(static_cast<unsigned char>(text[pos])) ||
                            text[pos] == ',')) {
            ++pos;
        }
        if (pos >= hi) {
            break;
        }
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + hi, v);
        if (ec != std::errc{}) {
            throw parameter_error("set literal: expected integer at \"" +
                                  text.substr(pos, hi - pos) + "\"");
        }
        vals.push_back(v);
        pos = static_cast<std::size_t>(ptr - text.data());
    }
    return IntSet::from_values(vals);
}

SdQuad parse_quad(const std::string& text) {
    std::vector<std::int64_t> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == ',')) {
            ++pos;
        }
        if (pos >= text.size()) {
            break;
        }
        std::int64_t v = 0;
        const auto [ptr, ec] =
            std::from_chars(text.data() + pos, text.data() + text.size(), v);
        if (ec != std::errc{}) {
            throw parameter_error("quad literal: expected integer in \"" + text + "\"");
        }
        parts.push_back(v);
        pos = static_cast<std::size_t>(ptr - text.data());
    }
    if (parts.size() != 4) {
        throw parameter_error("quad literal: need exactly four integers s,d,sigma,delta");
    }
    const SdQuad q{parts[0], parts[1], parts[2], parts[3]};
    validate_quad(q);
    return q;
}

nlohmann::json to_json(const IntSet& a) {
    nlohmann::json arr = nlohmann::json::array();
    a.for_each([&](std::int64_t v) { arr.push_back(v); });
    return arr;
}

nlohmann::json to_json(const SdQuad& q) {
    return nlohmann::json{{"s", q.s}, {"d", q.d}, {"sigma", q.sigma}, {"delta", q.delta}};
}

nlohmann::json to_json(const FringePair& fp) {
    return nlohmann::json{{"L", to_json(fp.L)}, {"R", to_json(fp.R)}, {"k", fp.k}};
}

nlohmann::json to_json(const DiffScanResult& r) {
    return nlohmann::json{{"fringe", to_json(r.fringe)},
                          {"k_hit", r.k_hit},
                          {"target_x", r.target_x},
                          {"profile", r.profile}};
}

nlohmann::json to_json(const SearchReport& r) {
    nlohmann::json j{{"config",
                      {{"seed", r.config.seed},
                       {"trials", r.config.trials},
                       {"r_max", r.config.r_max},
                       {"p", r.config.p},
                       {"workers", r.config.workers}}},
                     {"count_above_threshold", r.count_above_threshold},
                     {"threshold", kLogRatioThreshold},
                     {"degenerate_skips", r.degenerate_skips}};
    if (r.best_value.has_value()) {
        j["best_value"] = *r.best_value;
        j["best_witness"] = to_json(r.best_witness);
    } else {
        j["best_value"] = nullptr;
        j["best_witness"] = nlohmann::json::array();
    }
    return j;
}

IntSet set_from_json(const nlohmann::json& j) {
    if (!j.is_array()) {
        throw parameter_error("set JSON: expected an array of integers");
    }
    std::vector<std::int64_t> vals;
    vals.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_integer()) {
            throw parameter_error("set JSON: expected an array of integers");
        }
        vals.push_back(v.get<std::int64_t>());
    }
    return IntSet::from_values(vals);
}

FringePair fringe_pair_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("L") || !j.contains("R") || !j.contains("k")) {
        throw parameter_error("fringe pair JSON: expected {\"L\":[...],\"R\":[...],\"k\":k}");
    }
    FringePair fp{set_from_json(j["L"]), set_from_json(j["R"]), j["k"].get<std::int64_t>()};
    validate_fringe_pair(fp);
    return fp;
}

} // namespace mstd
