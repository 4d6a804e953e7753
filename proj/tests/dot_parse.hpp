#pragma once

// Parses DOT text back with Boost.Graph's reader.

#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/graphviz.hpp>

namespace demoreq::test {

struct DotVertex {
    std::string name;
    std::string label;
    std::string style;
    std::string xlabel;
};

struct DotEdge {
    std::string label;
    std::string style;
};

using DotGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::directedS, DotVertex, DotEdge>;

/// Throws boost::bad_graphviz_syntax on malformed input.
inline DotGraph parse_dot(const std::string& text) {
    DotGraph g;
    boost::dynamic_properties dp(boost::ignore_other_properties);
    dp.property("node_id", boost::get(&DotVertex::name, g));
    dp.property("label", boost::get(&DotVertex::label, g));
    dp.property("style", boost::get(&DotVertex::style, g));
    dp.property("xlabel", boost::get(&DotVertex::xlabel, g));
    dp.property("label", boost::get(&DotEdge::label, g));
    dp.property("style", boost::get(&DotEdge::style, g));
    if (!boost::read_graphviz(text, g, dp)) throw std::runtime_error("graphviz reader rejected input");
    return g;
}

} // namespace demoreq::test
