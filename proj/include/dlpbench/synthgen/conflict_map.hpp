#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace dlpbench {

enum class ConflictTag : std::uint8_t {
    Timing,
    NumberOfPeaks,
    Shape,
    RelativeMagnitude,
    TemporalSymmetry,
    FeatureDominance,
};

inline constexpr std::size_t kConflictTagCount = 6;

std::string tag_name(ConflictTag tag);
/// Accepts the names produced by tag_name; throws ParseError otherwise.
ConflictTag parse_tag(const std::string& name);
std::vector<ConflictTag> all_tags();

/// Symmetric table of conflict tags per unordered cluster pair.
class ConflictMap {
public:
    ConflictMap() = default;
    explicit ConflictMap(std::size_t clusters);

    std::size_t clusters() const noexcept { return n_; }
    void add(int a, int b, ConflictTag tag);
    bool has(int a, int b, ConflictTag tag) const;
    /// Tags in enum order; empty for a == b or unrelated pairs.
    std::vector<ConflictTag> tags(int a, int b) const;

    bool operator==(const ConflictMap&) const = default;

private:
    std::size_t slot(int a, int b) const;

    std::size_t n_ = 0;
    std::vector<std::uint8_t> bits_;
};

/// Reads [{"pair": [a, b], "tags": [...]}, ...].
ConflictMap parse_conflicts(const nlohmann::json& j, std::size_t clusters);

/// The conflict map of the built-in catalogue.
const ConflictMap& conflict_map();

}  // namespace dlpbench
