#include "dlpbench/synthgen/conflict_map.hpp"

#include <array>

#include "dlpbench/core/errors.hpp"
#include "dlpbench/synthgen/catalogue.hpp"

namespace dlpbench {

namespace {

constexpr std::array<const char*, kConflictTagCount> kTagNames{
    "Timing", "NumberOfPeaks", "Shape", "RelativeMagnitude", "TemporalSymmetry", "FeatureDominance"};

}  // namespace

std::string tag_name(ConflictTag tag) { return kTagNames[static_cast<std::size_t>(tag)]; }

ConflictTag parse_tag(const std::string& name) {
    for (std::size_t i = 0; i < kTagNames.size(); ++i) {
        if (name == kTagNames[i]) return static_cast<ConflictTag>(i);
    }
    throw ParseError("unknown conflict tag '" + name + "'");
}

std::vector<ConflictTag> all_tags() {
    std::vector<ConflictTag> out;
    for (std::size_t i = 0; i < kConflictTagCount; ++i) out.push_back(static_cast<ConflictTag>(i));
    return out;
}

ConflictMap::ConflictMap(std::size_t clusters) : n_(clusters), bits_(clusters * clusters, 0) {}

std::size_t ConflictMap::slot(int a, int b) const {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n_ || static_cast<std::size_t>(b) >= n_) {
        throw InvalidParameter("cluster pair (" + std::to_string(a) + ", " + std::to_string(b) +
                               ") outside the conflict map");
    }
    return static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b);
}

void ConflictMap::add(int a, int b, ConflictTag tag) {
    if (a == b) throw InvalidParameter("a cluster cannot conflict with itself");
    const auto bit = static_cast<std::uint8_t>(1U << static_cast<unsigned>(tag));
    bits_[slot(a, b)] |= bit;
    bits_[slot(b, a)] |= bit;
}

bool ConflictMap::has(int a, int b, ConflictTag tag) const {
    return (bits_[slot(a, b)] >> static_cast<unsigned>(tag) & 1U) != 0;
}

std::vector<ConflictTag> ConflictMap::tags(int a, int b) const {
    std::vector<ConflictTag> out;
    for (auto tag : all_tags()) {
        if (has(a, b, tag)) out.push_back(tag);
    }
    return out;
}

ConflictMap parse_conflicts(const nlohmann::json& j, std::size_t clusters) {
    ConflictMap map(clusters);
    for (const auto& entry : j) {
        const auto pair = entry.at("pair").get<std::vector<int>>();
        if (pair.size() != 2) throw ParseError("conflict pair must have two entries: " + entry.dump());
        for (const auto& tag : entry.at("tags")) map.add(pair[0], pair[1], parse_tag(tag.get<std::string>()));
    }
    return map;
}

const ConflictMap& conflict_map() { return default_catalogue().conflicts; }

}  // namespace dlpbench
