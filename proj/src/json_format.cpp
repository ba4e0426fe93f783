#include "arcrec/json_format.hpp"

#include <cstdio>
#include <utility>
#include <vector>

#include <json.hpp>

namespace arcrec {

namespace {

// Minimal emitter: the schemas are small and fixed, and we need exact
// control over float formatting.
class JsonWriter {
public:
    explicit JsonWriter(bool pretty) : pretty_(pretty) {}

    void open(char bracket) {
        value_separator();
        out_ += bracket;
        depth_ += 1;
        fresh_ = true;
    }
    void close(char bracket) {
        depth_ -= 1;
        if (pretty_ && !fresh_) newline();
        out_ += bracket;
        fresh_ = false;
    }
    void key(const char* name) {
        value_separator();
        out_ += '"';
        out_ += name;
        out_ += pretty_ ? "\": " : "\":";
        pending_key_ = true;
    }
    void number(double x) {
        value_separator();
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", x);
        out_ += buf;
    }
    void integer(long long x) {
        value_separator();
        out_ += std::to_string(x);
    }
    void boolean(bool b) {
        value_separator();
        out_ += b ? "true" : "false";
    }
    void string(std::string_view s) {
        value_separator();
        out_ += '"';
        out_ += s;  // schema strings contain no escapes
        out_ += '"';
    }

    std::string take() {
        out_ += '\n';
        return std::move(out_);
    }

private:
    void value_separator() {
        if (pending_key_) {
            pending_key_ = false;
            return;
        }
        if (!fresh_) out_ += ',';
        fresh_ = false;
        if (pretty_ && depth_ > 0) newline();
    }
    void newline() {
        out_ += '\n';
        out_.append(static_cast<std::size_t>(2 * depth_), ' ');
    }

    std::string out_;
    bool pretty_;
    bool pending_key_ = false;
    bool fresh_ = true;
    int depth_ = 0;
};

nlohmann::json parse_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw CliInputError("input is not valid JSON");
    return j;
}

int read_n(const nlohmann::json& j) {
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw CliInputError("missing integer field \"n\"");
    const long long n = j["n"].get<long long>();
    if (n < 0 || n > 64) throw CliInputError("\"n\" must lie in [0, 64]");
    return static_cast<int>(n);
}

std::vector<std::pair<double, double>> read_arc_pairs(const nlohmann::json& arr) {
    if (!arr.is_array()) throw CliInputError("\"arcs\" must be an array of pairs");
    std::vector<std::pair<double, double>> raw;
    raw.reserve(arr.size());
    for (const auto& item : arr) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number() ||
            !item[1].is_number())
            throw CliInputError("each arc must be a [start, end] number pair");
        raw.emplace_back(item[0].get<double>(), item[1].get<double>());
    }
    return raw;
}

void emit_arcs(JsonWriter& w, const ArcUnion& set) {
    w.key("full");
    w.boolean(set.is_full());
    w.key("arcs");
    w.open('[');
    for (const Arc& a : set.arcs()) {
        w.open('[');
        w.number(a.start);
        w.number(a.end);
        w.close(']');
    }
    w.close(']');
}

}  // namespace

SetRequest parse_set_request(const std::string& text) {
    const nlohmann::json j = parse_json(text);
    if (!j.is_object()) throw CliInputError("expected a JSON object");
    SetRequest req;
    req.n = read_n(j);
    if (j.contains("full") && j["full"].is_boolean() && j["full"].get<bool>()) {
        req.set = ArcUnion::full_circle();
        return req;
    }
    if (!j.contains("arcs")) throw CliInputError("expected \"arcs\" or \"full\": true");
    try {
        req.set = normalize(read_arc_pairs(j["arcs"]));
    } catch (const DegenerateArc& e) {
        throw CliInputError(e.what());
    }
    return req;
}

FourierTuple parse_coefficients(const std::string& text) {
    const nlohmann::json j = parse_json(text);
    const nlohmann::json* arr = &j;
    if (j.is_object()) {
        if (!j.contains("coefficients"))
            throw CliInputError("expected \"coefficients\" array");
        arr = &j["coefficients"];
    }
    if (!arr->is_array() || arr->empty())
        throw CliInputError("coefficients must be a nonempty array of [re, im] pairs");
    FourierTuple c;
    c.c.reserve(arr->size());
    for (const auto& item : *arr) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number() ||
            !item[1].is_number())
            throw CliInputError("each coefficient must be a [re, im] number pair");
        c.c.emplace_back(item[0].get<double>(), item[1].get<double>());
    }
    if (c.c.size() > 65) throw CliInputError("at most 65 coefficients are supported");
    return c;
}

std::string format_fourier_tuple(const FourierTuple& c, bool pretty) {
    JsonWriter w(pretty);
    w.open('{');
    w.key("coefficients");
    w.open('[');
    for (const Complex& v : c.c) {
        w.open('[');
        w.number(v.real());
        w.number(v.imag());
        w.close(']');
    }
    w.close(']');
    w.close('}');
    return w.take();
}

std::string format_outcome(const RecoveryOutcome& out, bool pretty) {
    JsonWriter w(pretty);
    w.open('{');
    if (out.recovered()) {
        w.key("status");
        w.string("recovered");
        emit_arcs(w, out.arcs);
        w.key("order");
        w.integer(out.order);
        w.key("residual");
        w.number(out.residual);
        w.key("norm");
        w.number(out.norm);
    } else {
        w.key("status");
        w.string("not_in_range");
        w.key("reason");
        w.string(to_string(out.reason));
        w.key("norm");
        w.number(out.norm);
        w.key("mismatch");
        w.number(out.mismatch);
    }
    w.close('}');
    return w.take();
}

std::string format_roundtrip(double max_endpoint_error, int order, bool pretty) {
    JsonWriter w(pretty);
    w.open('{');
    w.key("status");
    w.string("ok");
    w.key("max_endpoint_error");
    w.number(max_endpoint_error);
    w.key("order");
    w.integer(order);
    w.close('}');
    return w.take();
}

std::string format_selftest(const SelftestSummary& s, bool pretty) {
    JsonWriter w(pretty);
    w.open('{');
    w.key("cases");
    w.integer(s.cases);
    w.key("failures");
    w.integer(s.failures);
    w.key("max_error");
    w.number(s.max_error);
    w.key("mean_error");
    w.number(s.mean_error);
    w.key("failed_cases");
    w.open('[');
    for (int i : s.failed_cases) w.integer(i);
    w.close(']');
    w.close('}');
    return w.take();
}

}  // namespace arcrec
