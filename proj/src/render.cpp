#include "yfrieze/render.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace yfrieze {

namespace {

bool is_type_a(const CartanMatrix& a) {
    const auto& rec = a.recognition();
    return rec && rec->type.family == Family::A && rec->is_identity();
}

void rtrim(std::string& s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
}

} // namespace

std::string render_grid(const PatternWindow& w, bool border) {
    const auto r = w.rank();
    const auto ncols = static_cast<std::size_t>(w.width());
    std::vector<std::vector<std::string>> cells(r, std::vector<std::string>(ncols));
    std::size_t width = 1;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t c = 0; c < ncols; ++c) {
            cells[i][c] = w.at(i, w.lo() + static_cast<long>(c)).to_string();
            width = std::max(width, cells[i][c].size());
        }
    const bool with_border = border && is_type_a(w.cartan());
    if (with_border) {
        const std::string edge = w.kind() == PatternKind::frieze ? "1" : "0";
        cells.insert(cells.begin(), std::vector<std::string>(ncols, edge));
        cells.push_back(std::vector<std::string>(ncols, edge));
    }
    // Slot width is even so a half step is a whole number of spaces.
    const std::size_t slot = (width + 2) / 2 * 2;
    const std::size_t half = slot / 2;
    std::ostringstream os;
    for (std::size_t row = 0; row < cells.size(); ++row) {
        std::string line(row * half, ' ');
        for (const auto& cell : cells[row]) {
            line += std::string(slot - cell.size(), ' ');
            line += cell;
        }
        rtrim(line);
        os << line << '\n';
    }
    return os.str();
}

namespace {

nlohmann::ordered_json value_json(const SemiringValue& v) {
    if (std::holds_alternative<mpz_class>(v.storage()) && v.as_int().fits_slong_p()) return v.as_int().get_si();
    return v.to_string();
}

} // namespace

std::string window_to_json(const PatternWindow& w, int indent) {
    nlohmann::ordered_json j;
    j["kind"] = kind_name(w.kind());
    j["cartan"] = w.cartan().describe();
    j["semiring"] = w.semiring().name();
    j["cols"] = {w.lo(), w.hi()};
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < w.rank(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (long m = w.lo(); m <= w.hi(); ++m) row.push_back(value_json(w.at(i, m)));
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    j["period"] = w.period() ? nlohmann::ordered_json(*w.period()) : nlohmann::ordered_json(nullptr);
    return j.dump(indent);
}

PatternWindow window_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad pattern JSON: ") + e.what());
    }
    try {
        const auto kind = parse_kind(j.at("kind").get<std::string>());
        const auto cartan = parse_cartan(j.at("cartan").get<std::string>());
        const auto semiring = SemiringId::parse(j.at("semiring").get<std::string>(), cartan.rank());
        const auto cols = j.at("cols");
        const long lo = cols.at(0).get<long>();
        const long hi = cols.at(1).get<long>();
        PatternWindow w(kind, cartan, semiring, lo, hi);
        const auto& rows = j.at("rows");
        if (rows.size() != cartan.rank()) throw ParseError("row count does not match the Cartan rank");
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != static_cast<std::size_t>(hi - lo + 1)) throw ParseError("row length does not match cols");
            for (long m = lo; m <= hi; ++m) {
                const auto& cell = rows[i][static_cast<std::size_t>(m - lo)];
                const std::string s = cell.is_string() ? cell.get<std::string>() : cell.dump();
                w.set(i, m, sr_parse(semiring, s));
            }
        }
        if (j.contains("period") && !j["period"].is_null()) w.set_period(j["period"].get<int>());
        return w;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad pattern JSON: ") + e.what());
    }
}

std::string window_to_csv(const PatternWindow& w) {
    std::ostringstream os;
    os << 'm';
    for (std::size_t i = 0; i < w.rank(); ++i) os << ",row" << i + 1;
    os << '\n';
    for (long m = w.lo(); m <= w.hi(); ++m) {
        os << m;
        for (std::size_t i = 0; i < w.rank(); ++i) {
            auto s = w.at(i, m).to_string();
            if (s.find(',') != std::string::npos) s = '"' + s + '"';
            os << ',' << s;
        }
        os << '\n';
    }
    return os.str();
}

} // namespace yfrieze
