#include <json.hpp>

#include "bang/cli/session.hpp"

namespace bang::cli {

namespace {

using json = nlohmann::ordered_json;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

json point_json(const Vector& v)
{
    json out = json::object();
    for (const auto& [index, value] : v) {
        out[index.label] = value.to_string();
    }
    return out;
}

json content_json(const Multiindex& m)
{
    json out = json::object();
    for (const auto& [index, times] : m) {
        out[index.label] = times;
    }
    return out;
}

json ket_json(const CanonicalKet& k)
{
    return json{{"point", point_json(k.point)}, {"content", content_json(k.content)}};
}

json value_json(const Value& value)
{
    return std::visit(
        overloaded{
            [](const ScalarValue& v) { return json{{"kind", "scalar"}, {"value", v.value.to_string()}}; },
            [](const VectorValue& v) { return json{{"kind", "vector"}, {"entries", point_json(v.value)}}; },
            [](const BangValue& v) {
                json terms = json::array();
                for (const auto& [k, c] : v.value) {
                    terms.push_back(
                        {{"point", point_json(k.point)}, {"content", content_json(k.content)}, {"coeff", c.to_string()}});
                }
                return json{{"kind", "bang"}, {"terms", terms}};
            },
            [](const TensorValue& v) {
                json terms = json::array();
                for (const auto& [key, c] : v.value) {
                    terms.push_back({{"left", ket_json(key[0])}, {"right", ket_json(key[1])}, {"coeff", c.to_string()}});
                }
                return json{{"kind", "tensor"}, {"terms", terms}};
            },
            [](const FractionsValue& v) {
                json terms = json::array();
                for (const auto& [f, c] : v.value) {
                    terms.push_back({{"point", point_json(f.point)},
                                     {"exponents", content_json(f.exponents)},
                                     {"coeff", c.to_string()}});
                }
                return json{{"kind", "fractions"}, {"terms", terms}};
            },
        },
        value);
}

} // namespace

std::string render_machine(const Value& value)
{
    return value_json(value).dump();
}

std::string render_results(std::span<const QueryResult> results, OutputFormat format)
{
    std::string out;
    if (format == OutputFormat::Text) {
        for (const auto& r : results) {
            out += render_text(r.value) + "\n";
        }
        return out;
    }
    out = "{\"schema\":\"bang/1\",\"results\":[";
    for (std::size_t i = 0; i < results.size(); ++i) {
        const json entry{{"line", results[i].loc.line}, {"command", results[i].command}, {"value", value_json(results[i].value)}};
        out += (i == 0 ? "\n" : ",\n") + entry.dump();
    }
    return out + (results.empty() ? "]}\n" : "\n]}\n");
}

} // namespace bang::cli
