#include "embgo/arnas.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <memory>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include <fmt/format.h>

#include "embgo/error.hpp"
#include "embgo/random.hpp"

namespace embgo::arnas {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

void check_accuracy(double accuracy)
{
    if (!(accuracy >= 0.0 && accuracy <= 100.0))
        throw Error(ErrorKind::Domain, fmt::format("accuracy {} outside [0, 100]", accuracy));
}

double parse_number(std::string_view text, const std::string& where)
{
    // std::from_chars for double is available in libstdc++ 11.
    double value = 0.0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end)
        throw Error(ErrorKind::Parse, fmt::format("{}: '{}' is not a number", where, text));
    return value;
}

} // namespace

ArchCode::ArchCode(std::array<int, kEdges> ops) : ops_(ops)
{
    for (int op : ops_) {
        if (op < 0 || op >= static_cast<int>(kSymbols))
            throw Error(ErrorKind::Domain, fmt::format("operation symbol {} outside 0..4", op));
    }
}

ArchCode ArchCode::from_index(std::size_t index)
{
    if (index >= kCodeCount)
        throw Error(ErrorKind::Domain, fmt::format("code index {} out of range", index));
    std::array<int, kEdges> ops{};
    for (std::size_t e = kEdges; e-- > 0;) {
        ops[e] = static_cast<int>(index % kSymbols);
        index /= kSymbols;
    }
    return ArchCode(ops);
}

ArchCode ArchCode::parse(std::string_view digits)
{
    if (digits.size() != kEdges)
        throw Error(ErrorKind::Parse, fmt::format("code '{}' must have {} digits", digits, kEdges));
    std::array<int, kEdges> ops{};
    for (std::size_t e = 0; e < kEdges; ++e) {
        const char c = digits[e];
        if (c < '0' || c > '4')
            throw Error(ErrorKind::Parse, fmt::format("code '{}' has a digit outside 0-4", digits));
        ops[e] = c - '0';
    }
    return ArchCode(ops);
}

std::size_t ArchCode::index() const noexcept
{
    std::size_t index = 0;
    for (int op : ops_)
        index = index * kSymbols + static_cast<std::size_t>(op);
    return index;
}

std::string ArchCode::str() const
{
    std::string s(kEdges, '0');
    for (std::size_t e = 0; e < kEdges; ++e)
        s[e] = static_cast<char>('0' + ops_[e]);
    return s;
}

std::string_view operation_name(int symbol)
{
    switch (symbol) {
    case 0: return "zeroize";
    case 1: return "skip-connect";
    case 2: return "conv-1x1";
    case 3: return "conv-3x3";
    case 4: return "avgpool-3x3";
    default: throw Error(ErrorKind::Domain, fmt::format("operation symbol {} outside 0..4", symbol));
    }
}

int transfer(double x)
{
    if (x < -60.0)
        return 0;
    if (x < -20.0)
        return 1;
    if (x < 20.0)
        return 2;
    if (x < 60.0)
        return 3;
    return 4;
}

ArchCode decode(std::span<const double> x)
{
    if (x.size() != kEdges)
        throw Error(ErrorKind::Dimension, fmt::format("decode expects {} values, got {}", kEdges, x.size()));
    std::array<int, kEdges> ops{};
    for (std::size_t e = 0; e < kEdges; ++e)
        ops[e] = transfer(x[e]);
    return ArchCode(ops);
}

std::vector<double> encode_midpoints(const ArchCode& code)
{
    // Bands restricted to [-100, 100]: [-100,-60) [-60,-20) [-20,20) [20,60) [60,100].
    static constexpr double kMid[kSymbols] = {-80.0, -40.0, 0.0, 40.0, 80.0};
    std::vector<double> x(kEdges);
    for (std::size_t e = 0; e < kEdges; ++e)
        x[e] = kMid[code[e]];
    return x;
}

LookupTable::LookupTable() : accuracy_(kCodeCount, 0.0), present_(kCodeCount, false) {}

void LookupTable::set(const ArchCode& code, double accuracy)
{
    check_accuracy(accuracy);
    const std::size_t i = code.index();
    if (!present_[i]) {
        present_[i] = true;
        ++count_;
    }
    accuracy_[i] = accuracy;
}

std::optional<double> LookupTable::get(const ArchCode& code) const
{
    const std::size_t i = code.index();
    if (present_[i])
        return accuracy_[i];
    return default_;
}

void LookupTable::set_default(double accuracy)
{
    check_accuracy(accuracy);
    default_ = accuracy;
}

double lookup_fitness(const LookupTable& table, const ArchCode& code)
{
    const auto accuracy = table.get(code);
    if (!accuracy)
        throw Error(ErrorKind::IncompleteTable, fmt::format("no entry for code {} and no default", code.str()));
    return -*accuracy;
}

TableOptimum brute_force_optimum(const LookupTable& table)
{
    if (!table.complete())
        throw Error(ErrorKind::IncompleteTable,
                    fmt::format("exhaustive search needs all {} codes, table has {}", kCodeCount, table.size()));
    TableOptimum best{ArchCode::from_index(0), *table.get(ArchCode::from_index(0))};
    for (std::size_t i = 1; i < kCodeCount; ++i) {
        const ArchCode code = ArchCode::from_index(i);
        const double acc = *table.get(code);
        if (acc > best.accuracy)
            best = {code, acc};
    }
    return best;
}

double top_fraction_threshold(const LookupTable& table, double fraction)
{
    if (!table.complete())
        throw Error(ErrorKind::IncompleteTable, "threshold needs a complete table");
    if (!(fraction > 0.0 && fraction <= 1.0))
        throw Error(ErrorKind::Domain, "fraction must lie in (0, 1]");
    std::vector<double> acc;
    acc.reserve(kCodeCount);
    for (std::size_t i = 0; i < kCodeCount; ++i)
        acc.push_back(*table.get(ArchCode::from_index(i)));
    const auto k = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(kCodeCount)));
    std::nth_element(acc.begin(), acc.begin() + static_cast<std::ptrdiff_t>(k - 1), acc.end(), std::greater<>());
    return acc[k - 1];
}

LookupTable read_table(std::istream& in, const std::string& source)
{
    LookupTable table;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string where = fmt::format("{}:{}", source, line_no);
        std::string_view text = trim(line);
        if (text.empty())
            continue;
        if (text.front() == '#') {
            const std::string_view body = trim(text.substr(1));
            const auto colon = body.find(':');
            if (colon == std::string_view::npos)
                continue;
            const std::string_view key = trim(body.substr(0, colon));
            const std::string_view value = trim(body.substr(colon + 1));
            if (key == "dataset")
                table.dataset = std::string(value);
            else if (key == "attack")
                table.attack = std::string(value);
            else if (key == "default") {
                try {
                    table.set_default(parse_number(value, where));
                } catch (const Error& e) {
                    throw Error(ErrorKind::Parse, fmt::format("{}: bad default: {}", where, e.what()));
                }
            }
            continue;
        }
        if (!header_seen) {
            if (text != "code,accuracy")
                throw Error(ErrorKind::Parse, fmt::format("{}: expected header 'code,accuracy'", where));
            header_seen = true;
            continue;
        }
        const auto comma = text.find(',');
        if (comma == std::string_view::npos)
            throw Error(ErrorKind::Parse, fmt::format("{}: expected 'code,accuracy'", where));
        ArchCode code;
        try {
            code = ArchCode::parse(trim(text.substr(0, comma)));
        } catch (const Error& e) {
            throw Error(ErrorKind::Parse, fmt::format("{}: {}", where, e.what()));
        }
        const double accuracy = parse_number(trim(text.substr(comma + 1)), where);
        if (!(accuracy >= 0.0 && accuracy <= 100.0))
            throw Error(ErrorKind::Parse, fmt::format("{}: accuracy {} outside [0, 100]", where, accuracy));
        if (table.contains(code))
            throw Error(ErrorKind::Parse, fmt::format("{}: duplicate code {}", where, code.str()));
        table.set(code, accuracy);
    }
    if (!header_seen)
        throw Error(ErrorKind::Parse, fmt::format("{}: missing header 'code,accuracy'", source));
    return table;
}

LookupTable load_table(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::Parse, fmt::format("cannot open table '{}'", path.string()));
    return read_table(in, path.string());
}

void write_table(std::ostream& out, const LookupTable& table)
{
    if (!table.dataset.empty())
        out << "# dataset: " << table.dataset << '\n';
    if (!table.attack.empty())
        out << "# attack: " << table.attack << '\n';
    if (table.default_accuracy())
        out << "# default: " << fmt::format("{}", *table.default_accuracy()) << '\n';
    out << "code,accuracy\n";
    for (std::size_t i = 0; i < kCodeCount; ++i) {
        const ArchCode code = ArchCode::from_index(i);
        if (table.contains(code))
            out << code.str() << ',' << fmt::format("{}", *table.get(code)) << '\n';
    }
}

void save_table(const std::filesystem::path& path, const LookupTable& table)
{
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorKind::Data, fmt::format("cannot write table '{}'", path.string()));
    write_table(out, table);
}

LookupTable synthetic_table(std::uint64_t seed, double noise, double match_bonus)
{
    RngStream rng(seed);
    std::array<int, kEdges> target{};
    for (auto& t : target)
        t = static_cast<int>(rng.below(kSymbols));
    LookupTable table;
    table.dataset = "synthetic";
    table.attack = "none";
    for (std::size_t i = 0; i < kCodeCount; ++i) {
        const ArchCode code = ArchCode::from_index(i);
        double acc = rng.uniform() * noise;
        for (std::size_t e = 0; e < kEdges; ++e) {
            if (code[e] == target[e])
                acc += match_bonus;
        }
        // Two decimals, like published accuracy tables.
        acc = std::round(std::clamp(acc, 0.0, 100.0) * 100.0) / 100.0;
        table.set(code, acc);
    }
    return table;
}

Problem make_lookup_problem(const LookupTable& table, std::string name)
{
    auto shared = std::make_shared<const LookupTable>(table);
    return Problem(std::move(name), Bounds::uniform(kEdges, -100.0, 100.0),
                   [shared](std::span<const double> x) { return lookup_fitness(*shared, decode(x)); });
}

} // namespace embgo::arnas
