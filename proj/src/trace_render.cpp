#include <algorithm>
#include <string>
#include <vector>

#include <json.hpp>

#include "nikhilam/multiply.hpp"

namespace nikhilam {

namespace {

// binary digits with a '-' prefix for negatives; positives stay bare so the
// worked-example rows come out verbatim
std::string signed_bin(const SignedInt& v) { return format(v, 2); }

// x zero-padded to y's digit count, the pad inserted after any sign
std::string padded_bin(const SignedInt& v, std::size_t digits) {
    std::string s = format(v.magnitude, 2);
    if (s.size() < digits) s.insert(0, digits - s.size(), '0');
    return v.negative ? "-" + s : s;
}

struct Column {
    std::string top;     // larger operand
    std::string bottom;  // smaller operand
    std::string foot;    // partial sum, or terminal product
};

}  // namespace

std::string render_trace(const RecursionTrace& trace) {
    // verification pair: the level-0 operands (larger first), or the terminal
    // pair when no level was formed
    std::string lhs_dec, rhs_dec;
    if (trace.levels.empty()) {
        lhs_dec = format(trace.terminal_y, 10);
        rhs_dec = format(trace.terminal_x, 10);
    } else {
        lhs_dec = format(trace.levels.front().y, 10);
        rhs_dec = format(trace.levels.front().x, 10);
    }
    std::string verification =
        lhs_dec + " × " + rhs_dec + " = " + format(trace.final_product, 10);

    if (trace.levels.empty()) return verification + "\n";

    std::vector<Column> columns;
    columns.reserve(trace.levels.size() + 1);
    for (const TraceLevel& level : trace.levels) {
        Column col;
        col.top = padded_bin(SignedInt::from_parts(level.sign_y, level.y), 0);
        col.bottom = padded_bin(SignedInt::from_parts(level.sign_x, level.x),
                                format(level.y, 2).size());
        col.foot = signed_bin(level.partial_sum);
        columns.push_back(std::move(col));
    }
    Column terminal;
    terminal.top = signed_bin(trace.terminal_y);
    terminal.bottom = padded_bin(trace.terminal_x, format(trace.terminal_y.magnitude, 2).size());
    terminal.foot = signed_bin(trace.terminal_product);
    columns.push_back(std::move(terminal));

    std::string rows[3];
    for (std::size_t c = 0; c < columns.size(); ++c) {
        const Column& col = columns[c];
        std::size_t width = std::max({col.top.size(), col.bottom.size(), col.foot.size()});
        const std::string* cells[3] = {&col.top, &col.bottom, &col.foot};
        for (int r = 0; r < 3; ++r) {
            if (c > 0) rows[r] += "  ";
            rows[r].append(width - cells[r]->size(), ' ');
            rows[r] += *cells[r];
        }
    }

    std::string out;
    for (const auto& row : rows) out += row + "\n";
    out += "result " + format(trace.final_product.magnitude, 2) + "\n";
    out += verification + "\n";
    return out;
}

std::string trace_records(const RecursionTrace& trace) {
    std::string out;
    for (std::size_t i = 0; i < trace.levels.size(); ++i) {
        const TraceLevel& level = trace.levels[i];
        nlohmann::json rec{
            {"record", "level"},
            {"index", i},
            {"x", format(level.x, 2)},
            {"y", format(level.y, 2)},
            {"sign_x", level.sign_x},
            {"sign_y", level.sign_y},
            {"base_exponent", level.base_exponent},
            {"diff_x", signed_bin(level.diff_x)},
            {"diff_y", signed_bin(level.diff_y)},
            {"partial_sum", signed_bin(level.partial_sum)},
        };
        out += rec.dump() + "\n";
    }
    nlohmann::json terminal{
        {"record", "terminal"},
        {"x", signed_bin(trace.terminal_x)},
        {"y", signed_bin(trace.terminal_y)},
        {"product", signed_bin(trace.terminal_product)},
    };
    out += terminal.dump() + "\n";
    nlohmann::json final_rec{
        {"record", "final"},
        {"product", signed_bin(trace.final_product)},
        {"product_decimal", format(trace.final_product, 10)},
    };
    out += final_rec.dump() + "\n";
    return out;
}

}  // namespace nikhilam
