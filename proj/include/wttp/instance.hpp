#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wttp {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class EdgeWeightType { CEIL_2D, EUC_2D };

inline std::string to_string(EdgeWeightType t) {
    return t == EdgeWeightType::CEIL_2D ? "CEIL_2D" : "EUC_2D";
}

struct Coord {
    double x = 0.0;
    double y = 0.0;
};

struct Item {
    int id = 0;         // 1-based item index
    double profit = 0;
    double weight = 0;
    int city = 0;       // 1-based city index
};

// Immutable after parsing; safe to share across workers.
struct TtpInstance {
    std::string name;
    int n = 0;
    std::vector<Coord> coords;
    std::vector<Item> items;
    double capacity_file = 0;
    double v_min = 0;
    double v_max = 0;
    double renting_rate = 0;
    EdgeWeightType edge_weight_type = EdgeWeightType::CEIL_2D;

    int item_count() const { return static_cast<int>(items.size()); }

    // 1-based city indices; CEIL_2D -> ceil, EUC_2D -> TSPlib nint rounding
    double distance(int i, int j) const {
        if (i < 1 || i > n || j < 1 || j > n)
            throw std::out_of_range("city index out of range: " + std::to_string(i) +
                                    ", " + std::to_string(j));
        const double dx = coords[i - 1].x - coords[j - 1].x;
        const double dy = coords[i - 1].y - coords[j - 1].y;
        const double d = std::sqrt(dx * dx + dy * dy);
        return edge_weight_type == EdgeWeightType::CEIL_2D ? std::ceil(d)
                                                           : std::floor(d + 0.5);
    }
};

// Permutation of {1..n} with city 1 pinned to position 1.
struct Tour {
    std::vector<int> order;

    int size() const { return static_cast<int>(order.size()); }

    bool is_valid(int n) const {
        if (static_cast<int>(order.size()) != n || n < 1) return false;
        if (order[0] != 1) return false;
        std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
        for (int c : order) {
            if (c < 1 || c > n || seen[c]) return false;
            seen[c] = 1;
        }
        return true;
    }
};

namespace detail {

inline std::string trim(std::string s) {
    const char* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

struct LineReader {
    std::istringstream in;
    int line_no = 0;

    explicit LineReader(const std::string& text) : in(text) {}

    // next non-empty trimmed line, or false at EOF
    bool next(std::string& out) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_no;
            out = trim(raw);
            if (!out.empty()) return true;
        }
        return false;
    }
};

[[noreturn]] inline void fail(int line, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ": " + msg);
}

inline double parse_real(const std::string& tok, int line) {
    std::size_t pos = 0;
    double v = 0;
    try {
        v = std::stod(tok, &pos);
    } catch (const std::exception&) {
        fail(line, "expected a number, got '" + tok + "'");
    }
    if (pos != tok.size()) fail(line, "expected a number, got '" + tok + "'");
    if (!std::isfinite(v)) fail(line, "non-finite value '" + tok + "'");
    return v;
}

inline long parse_int(const std::string& tok, int line) {
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(tok, &pos);
    } catch (const std::exception&) {
        fail(line, "expected an integer, got '" + tok + "'");
    }
    if (pos != tok.size()) fail(line, "expected an integer, got '" + tok + "'");
    return v;
}

inline std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

}  // namespace detail

// TTP 2017 competition format: key/value header, NODE_COORD_SECTION,
// ITEMS SECTION.
inline TtpInstance parse_ttp_instance(const std::string& text) {
    using namespace detail;
    TtpInstance inst;
    LineReader rd(text);
    std::string line;
    long m = -1;
    bool have_dim = false, have_vmin = false, have_vmax = false;

    auto starts_with = [](const std::string& s, std::string_view prefix) {
        return s.rfind(prefix, 0) == 0;
    };

    // header
    bool in_coords = false;
    while (rd.next(line)) {
        if (starts_with(line, "NODE_COORD_SECTION")) {
            in_coords = true;
            break;
        }
        auto colon = line.find(':');
        if (colon == std::string::npos) fail(rd.line_no, "malformed header line '" + line + "'");
        std::string key = trim(line.substr(0, colon));
        std::string value = trim(line.substr(colon + 1));
        if (key == "PROBLEM NAME" || key == "NAME") {
            inst.name = value;
        } else if (key == "KNAPSACK DATA TYPE" || key == "TYPE" || key == "COMMENT") {
            // informational
        } else if (key == "DIMENSION") {
            inst.n = static_cast<int>(parse_int(value, rd.line_no));
            have_dim = true;
        } else if (key == "NUMBER OF ITEMS") {
            m = parse_int(value, rd.line_no);
        } else if (key == "CAPACITY OF KNAPSACK") {
            inst.capacity_file = parse_real(value, rd.line_no);
        } else if (key == "MIN SPEED") {
            inst.v_min = parse_real(value, rd.line_no);
            have_vmin = true;
        } else if (key == "MAX SPEED") {
            inst.v_max = parse_real(value, rd.line_no);
            have_vmax = true;
        } else if (key == "RENTING RATIO") {
            inst.renting_rate = parse_real(value, rd.line_no);
        } else if (key == "EDGE_WEIGHT_TYPE") {
            if (value == "CEIL_2D")
                inst.edge_weight_type = EdgeWeightType::CEIL_2D;
            else if (value == "EUC_2D")
                inst.edge_weight_type = EdgeWeightType::EUC_2D;
            else
                fail(rd.line_no, "unknown EDGE_WEIGHT_TYPE '" + value + "'");
        } else {
            fail(rd.line_no, "unknown header key '" + key + "'");
        }
    }
    if (!in_coords) fail(rd.line_no, "missing NODE_COORD_SECTION");
    if (!have_dim || inst.n < 1) fail(rd.line_no, "missing or invalid DIMENSION");
    if (m < 0) fail(rd.line_no, "missing NUMBER OF ITEMS");
    if (have_vmin && have_vmax && !(inst.v_min < inst.v_max))
        fail(rd.line_no, "MIN SPEED must be less than MAX SPEED");

    inst.coords.reserve(static_cast<std::size_t>(inst.n));
    for (int i = 1; i <= inst.n; ++i) {
        if (!rd.next(line)) fail(rd.line_no, "NODE_COORD_SECTION ended early, expected " +
                                                 std::to_string(inst.n) + " lines");
        if (starts_with(line, "ITEMS SECTION"))
            fail(rd.line_no, "NODE_COORD_SECTION has fewer lines than DIMENSION");
        auto toks = split_ws(line);
        if (toks.size() != 3) fail(rd.line_no, "expected 'index x y'");
        if (parse_int(toks[0], rd.line_no) != i)
            fail(rd.line_no, "node index out of order, expected " + std::to_string(i));
        Coord c{parse_real(toks[1], rd.line_no), parse_real(toks[2], rd.line_no)};
        inst.coords.push_back(c);
    }

    if (!rd.next(line)) {
        if (m == 0) return inst;
        fail(rd.line_no, "expected ITEMS SECTION");
    }
    if (!starts_with(line, "ITEMS SECTION")) fail(rd.line_no, "expected ITEMS SECTION");
    inst.items.reserve(static_cast<std::size_t>(m));
    for (long k = 1; k <= m; ++k) {
        if (!rd.next(line)) fail(rd.line_no, "ITEMS SECTION ended early, expected " +
                                                 std::to_string(m) + " lines");
        auto toks = split_ws(line);
        if (toks.size() != 4) fail(rd.line_no, "expected 'index profit weight city'");
        Item it;
        it.id = static_cast<int>(parse_int(toks[0], rd.line_no));
        if (it.id != static_cast<int>(k))
            fail(rd.line_no, "item index out of order, expected " + std::to_string(k));
        it.profit = parse_real(toks[1], rd.line_no);
        it.weight = parse_real(toks[2], rd.line_no);
        it.city = static_cast<int>(parse_int(toks[3], rd.line_no));
        if (it.profit <= 0) fail(rd.line_no, "item profit must be positive");
        if (it.weight <= 0) fail(rd.line_no, "item weight must be positive");
        if (it.city < 1 || it.city > inst.n)
            fail(rd.line_no, "item city index out of range");
        if (it.city == 1)
            std::cerr << "warning: item " << it.id << " is stationed at city 1\n";
        inst.items.push_back(it);
    }
    if (rd.next(line)) {
        auto toks = split_ws(line);
        if (!toks.empty() && toks[0] != "EOF")
            fail(rd.line_no, "ITEMS SECTION has more lines than NUMBER OF ITEMS");
    }
    return inst;
}

inline std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string serialize_ttp_instance(const TtpInstance& inst) {
    std::ostringstream os;
    os << "PROBLEM NAME: " << inst.name << "\n";
    os << "DIMENSION: " << inst.n << "\n";
    os << "NUMBER OF ITEMS: " << inst.items.size() << "\n";
    os << "CAPACITY OF KNAPSACK: " << format_real(inst.capacity_file) << "\n";
    os << "MIN SPEED: " << format_real(inst.v_min) << "\n";
    os << "MAX SPEED: " << format_real(inst.v_max) << "\n";
    os << "RENTING RATIO: " << format_real(inst.renting_rate) << "\n";
    os << "EDGE_WEIGHT_TYPE: " << to_string(inst.edge_weight_type) << "\n";
    os << "NODE_COORD_SECTION (INDEX, X, Y):\n";
    for (int i = 1; i <= inst.n; ++i)
        os << i << " " << format_real(inst.coords[i - 1].x) << " "
           << format_real(inst.coords[i - 1].y) << "\n";
    os << "ITEMS SECTION (INDEX, PROFIT, WEIGHT, ASSIGNED NODE NUMBER):\n";
    for (const Item& it : inst.items)
        os << it.id << " " << format_real(it.profit) << " " << format_real(it.weight)
           << " " << it.city << "\n";
    return os.str();
}

// TSPlib .tour format. The returned tour is rotated so city 1 sits at
// position 1; rotation preserves the cyclic edge set.
inline Tour parse_tour_file(const std::string& text, int n) {
    using namespace detail;
    LineReader rd(text);
    std::string line;
    bool in_section = false;
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    while (rd.next(line)) {
        if (!in_section) {
            if (line.rfind("TOUR_SECTION", 0) == 0) {
                in_section = true;
                line = trim(line.substr(12));
                if (line.empty()) continue;
            } else {
                continue;  // NAME/TYPE/DIMENSION etc.
            }
        }
        for (const std::string& tok : split_ws(line)) {
            if (tok == "-1" || tok == "EOF") goto done;
            order.push_back(static_cast<int>(parse_int(tok, rd.line_no)));
        }
    }
done:
    if (!in_section) throw ParseError("missing TOUR_SECTION");
    if (static_cast<int>(order.size()) != n)
        throw ParseError("tour has " + std::to_string(order.size()) +
                         " cities, expected " + std::to_string(n));
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int c : order) {
        if (c < 1 || c > n) throw ParseError("city index " + std::to_string(c) + " out of range");
        if (seen[c]) throw ParseError("duplicate city " + std::to_string(c));
        seen[c] = 1;
    }
    auto it = std::find(order.begin(), order.end(), 1);
    std::rotate(order.begin(), it, order.end());
    return Tour{std::move(order)};
}

inline std::string serialize_tour(const Tour& tour, const std::string& name = "tour") {
    std::ostringstream os;
    os << "NAME: " << name << "\n";
    os << "TYPE: TOUR\n";
    os << "DIMENSION: " << tour.size() << "\n";
    os << "TOUR_SECTION\n";
    for (int c : tour.order) os << c << "\n";
    os << "-1\nEOF\n";
    return os.str();
}

}  // namespace wttp
