#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "embgo/problem.hpp"

namespace embgo::arnas {

inline constexpr std::size_t kEdges = 6;
inline constexpr std::size_t kSymbols = 5;
inline constexpr std::size_t kCodeCount = 15625; // 5^6

/// One operation symbol per cell edge, each in 0..4.
class ArchCode {
public:
    ArchCode() = default;
    /// Throws Domain when a symbol is outside 0..4.
    explicit ArchCode(std::array<int, kEdges> ops);

    static ArchCode from_index(std::size_t index);
    /// Six digits 0-4, e.g. "340124".
    static ArchCode parse(std::string_view digits);

    /// Base-5 value with the first edge most significant, so index order is
    /// lexicographic order.
    std::size_t index() const noexcept;
    const std::array<int, kEdges>& ops() const noexcept { return ops_; }
    int operator[](std::size_t edge) const { return ops_[edge]; }
    std::string str() const;

    auto operator<=>(const ArchCode&) const = default;

private:
    std::array<int, kEdges> ops_{};
};

/// Symbol -> operation name; 0=zeroize, 1=skip-connect, 2=conv-1x1, 3=conv-3x3, 4=avgpool-3x3.
std::string_view operation_name(int symbol);

/// Truncation of the real line into five bands with cut points -60, -20, 20, 60.
int transfer(double x);

/// Component-wise transfer of a length-6 vector.
ArchCode decode(std::span<const double> x);

/// Midpoint of each band, usable as a canonical encoding of a code.
std::vector<double> encode_midpoints(const ArchCode& code);

class LookupTable {
public:
    LookupTable();

    void set(const ArchCode& code, double accuracy);
    std::optional<double> get(const ArchCode& code) const;
    bool contains(const ArchCode& code) const { return present_[code.index()]; }

    std::size_t size() const noexcept { return count_; }
    bool complete() const noexcept { return count_ == kCodeCount; }

    const std::optional<double>& default_accuracy() const noexcept { return default_; }
    void set_default(double accuracy);

    std::string dataset;
    std::string attack;

private:
    std::vector<double> accuracy_;
    std::vector<bool> present_;
    std::size_t count_ = 0;
    std::optional<double> default_;
};

/// -accuracy for the code; falls back to the default. Throws IncompleteTable.
double lookup_fitness(const LookupTable& table, const ArchCode& code);

struct TableOptimum {
    ArchCode code;
    double accuracy = 0.0;
};

/// Exhaustive argmax; ties go to the lexicographically smallest code.
TableOptimum brute_force_optimum(const LookupTable& table);

/// Accuracy at the given quantile from the top, e.g. 0.01 -> the accuracy of
/// the ceil(1% * 15625)-th best code. Requires a complete table.
double top_fraction_threshold(const LookupTable& table, double fraction);

/// Text format: header "code,accuracy", then "dddddd,float" lines. Lines
/// starting with '#' are comments; "# dataset: X", "# attack: X" and
/// "# default: A" are recognised as metadata.
LookupTable read_table(std::istream& in, const std::string& source = "<stream>");
LookupTable load_table(const std::filesystem::path& path);
void write_table(std::ostream& out, const LookupTable& table);
void save_table(const std::filesystem::path& path, const LookupTable& table);

/// Seeded rugged landscape: uniform base noise plus a bonus per edge that
/// matches a hidden target code.
LookupTable synthetic_table(std::uint64_t seed, double noise = 30.0, double match_bonus = 10.0);

/// The optimizer-facing problem: [-100, 100]^6, decoded and looked up.
Problem make_lookup_problem(const LookupTable& table, std::string name = "arnas");

} // namespace embgo::arnas
