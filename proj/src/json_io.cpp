#include "mbg/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace mbg {

using nlohmann::json;

json graph_to_json(const SimpleGraph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges) edges.push_back(json::array({u, v}));
    return json{{"n", g.n}, {"edges", edges}};
}

SimpleGraph graph_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph json: expected keys \"n\" and \"edges\"");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph json: each edge must be a [u,v] pair");
        edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    }
    return SimpleGraph(j.at("n").get<int>(), std::move(edges));
}

json family_to_json(const Family& f) {
    json groups = json::array();
    for (const auto& g : f.groups) {
        json sets = json::array();
        for (const auto& s : g.sets) sets.push_back(s);
        groups.push_back(json{{"name", g.name}, {"sets", sets}});
    }
    return json{{"groups", groups}};
}

Family family_from_json(const json& j, int element_count) {
    if (!j.contains("groups")) throw std::invalid_argument("family json: expected key \"groups\"");
    Family f;
    for (const auto& gj : j.at("groups")) {
        FamilyGroup g;
        g.name = gj.value("name", "F");
        for (const auto& sj : gj.at("sets")) g.sets.push_back(sj.get<std::vector<ElementId>>());
        f.groups.push_back(std::move(g));
    }
    normalize_family(f, element_count);
    return f;
}

namespace {

std::string player_name(Player p) { return p == Player::Maker ? "maker" : "breaker"; }

Player player_from(const std::string& s) {
    if (s == "maker") return Player::Maker;
    if (s == "breaker") return Player::Breaker;
    throw std::invalid_argument("trace json: unknown player \"" + s + "\"");
}

} // namespace

json trace_to_json(const MatchTrace& trace, const json& config) {
    json stages = json::array();
    for (const auto& st : trace.stages) {
        json moves = json::array();
        for (const auto& mv : st.moves)
            moves.push_back(json{{"player", player_name(mv.player)}, {"elements", mv.elements}});
        stages.push_back(json{{"stage", st.stage},
                              {"board_size", st.board_size},
                              {"moves", moves},
                              {"survivors", st.survivors},
                              {"survived", st.survived}});
    }
    json out{{"version", 1},
             {"config", config},
             {"variant", trace.variant == Variant::Standard ? "standard" : "stop"},
             {"bias", trace.bias},
             {"stages", stages},
             {"tau_observed", trace.tau_observed},
             {"truncated", trace.truncated}};
    if (trace.forfeit)
        out["forfeit"] = json{{"by", player_name(trace.forfeit->by)},
                              {"reason", trace.forfeit->reason}};
    return out;
}

MatchTrace trace_from_json(const json& j) {
    if (j.value("version", 0) != 1)
        throw std::invalid_argument("trace json: unsupported version");
    MatchTrace trace;
    std::string variant = j.at("variant").get<std::string>();
    if (variant == "standard")
        trace.variant = Variant::Standard;
    else if (variant == "stop")
        trace.variant = Variant::Stop;
    else
        throw std::invalid_argument("trace json: unknown variant \"" + variant + "\"");
    trace.bias = j.at("bias").get<int>();
    for (const auto& sj : j.at("stages")) {
        StageTrace st;
        st.stage = sj.at("stage").get<int>();
        st.board_size = sj.at("board_size").get<std::size_t>();
        for (const auto& mj : sj.at("moves")) {
            Move mv;
            mv.player = player_from(mj.at("player").get<std::string>());
            mv.elements = mj.at("elements").get<std::vector<ElementId>>();
            st.moves.push_back(std::move(mv));
        }
        st.survivors = sj.at("survivors").get<std::vector<std::size_t>>();
        st.survived = sj.at("survived").get<bool>();
        trace.stages.push_back(std::move(st));
    }
    trace.tau_observed = j.at("tau_observed").get<int>();
    trace.truncated = j.at("truncated").get<bool>();
    if (j.contains("forfeit")) {
        Forfeit f;
        f.by = player_from(j.at("forfeit").at("by").get<std::string>());
        f.reason = j.at("forfeit").at("reason").get<std::string>();
        trace.forfeit = f;
    }
    return trace;
}

std::string summary_csv_header() {
    return "game,n,b,maker,breaker,variant,seed,tau_observed,stages,truncated,forfeit";
}

std::string summary_csv_row(const std::string& game, int n, int b, const std::string& maker,
                            const std::string& breaker, const std::string& variant,
                            std::uint64_t seed, const MatchTrace& trace) {
    std::ostringstream row;
    row << game << ',' << n << ',' << b << ',' << maker << ',' << breaker << ',' << variant << ','
        << seed << ',' << trace.tau_observed << ',' << trace.stages.size() << ','
        << (trace.truncated ? 1 : 0) << ','
        << (trace.forfeit ? player_name(trace.forfeit->by) : "");
    return row.str();
}

} // namespace mbg
