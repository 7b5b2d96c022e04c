#include <gtest/gtest.h>

#include <regex>

#include "common.hpp"

using namespace topoknit;
using topoknit::testing::fixture;

namespace {

int occurrences(const std::string& text, const std::string& needle) {
    int n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST(Style, CoordinateMapping) {
    const RenderStyle st;
    EXPECT_EQ(st.x(0), 40);
    EXPECT_EQ(st.x(3), 160);
    EXPECT_EQ(st.y(0, 4), 160);
    EXPECT_EQ(st.y(3, 4), 40);
    EXPECT_EQ(st.yarn_color(0), "#ff00ff");
    EXPECT_EQ(st.yarn_color(1), "#008080");
}

TEST(Style, DegenerateRejected) {
    const TopologyGraph tg = evaluate_graph(fixture("single_knit"));
    RenderStyle st;
    st.spacing = 0;
    EXPECT_THROW(render_svg(tg, st), DegenerateStyle);
    st = {};
    st.disk_radius = -1;
    EXPECT_THROW(render_svg(tg, st), DegenerateStyle);
}

TEST(Svg, SingleKnitGolden) {
    const std::string svg = render_svg(evaluate_graph(fixture("single_knit")));
    EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
    EXPECT_NE(svg.find(R"(width="120" height="120" viewBox="0 0 120 120")"), std::string::npos);
    EXPECT_NE(svg.find(R"(<line class="segment" data-row="0" x1="40" y1="80" x2="40" y2="40" stroke="#ff00ff")"),
              std::string::npos);
    EXPECT_NE(svg.find(R"(<circle class="KnitACN" data-i="0" data-j="0" cx="40" cy="80" r="7" fill="#9e9e9e")"),
              std::string::npos);
    EXPECT_NE(svg.find(R"(<circle class="PCN" data-i="1" data-j="1" cx="80" cy="40" r="7" fill="#ffffff")"),
              std::string::npos);
    EXPECT_EQ(svg.substr(svg.size() - 7), "</svg>\n");
}

TEST(Svg, OneShapePerNodeAndEdge) {
    for (const auto& name : topoknit::testing::valid_fixtures()) {
        const TopologyGraph tg = evaluate_graph(fixture(name));
        const std::string svg = render_svg(tg);
        int markers = 0, loops = 0;
        for (const auto& n : tg.nodes) markers += n.kind == NodeKind::UACNMarker;
        for (const auto& e : tg.edges) loops += e.kind == EdgeKind::BorderLoop;
        EXPECT_EQ(occurrences(svg, "<circle "), static_cast<int>(tg.nodes.size()) - markers) << name;
        EXPECT_EQ(occurrences(svg, "<rect class=\"UACNMarker\""), markers) << name;
        EXPECT_EQ(occurrences(svg, "<line class=\"segment\""), static_cast<int>(tg.edges.size()) - loops) << name;
        EXPECT_EQ(occurrences(svg, "<path class=\"loop\""), 3 * loops) << name;
    }
}

TEST(Svg, NodesInsideCanvas) {
    const TopologyGraph tg = evaluate_graph(fixture("transfer_block"));
    const RenderStyle st;
    const std::string svg = render_svg(tg, st);
    const int w = (tg.width - 1) * st.spacing + 2 * st.margin();
    const int h = (tg.height - 1) * st.spacing + 2 * st.margin();
    const std::regex circle(R"re(cx="(\d+)" cy="(\d+)")re");
    int seen = 0;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), circle); it != std::sregex_iterator(); ++it) {
        const int cx = std::stoi((*it)[1]), cy = std::stoi((*it)[2]);
        EXPECT_GE(cx - st.disk_radius, 0);
        EXPECT_LE(cx + st.disk_radius, w);
        EXPECT_GE(cy - st.disk_radius, 0);
        EXPECT_LE(cy + st.disk_radius, h);
        ++seen;
    }
    EXPECT_GT(seen, 0);
}

TEST(Svg, RowColorsAlternate) {
    const std::string svg = render_svg(evaluate_graph(fixture("all_knit_3x3")));
    const std::regex seg(R"re(<line class="segment" data-row="(\d+)"[^>]*stroke="(#[0-9a-f]+)")re");
    int seen = 0;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), seg); it != std::sregex_iterator(); ++it) {
        EXPECT_EQ((*it)[2], std::stoi((*it)[1]) % 2 == 0 ? "#ff00ff" : "#008080");
        ++seen;
    }
    EXPECT_EQ(seen, 33);
}

TEST(Svg, StyleOverrides) {
    const TopologyGraph tg = evaluate_graph(fixture("tuck_pair"));
    RenderStyle st;
    st.spacing = 20;
    st.square_side = 6;
    st.knit_fill = "#123456";
    st.arrowheads = false;
    const std::string svg = render_svg(tg, st);
    EXPECT_NE(svg.find("#123456"), std::string::npos);
    EXPECT_EQ(svg.find("#9e9e9e"), std::string::npos);
    EXPECT_EQ(svg.find("marker-end"), std::string::npos);
    EXPECT_EQ(svg.find("<defs>"), std::string::npos);
    EXPECT_NE(svg.find(R"(width="6" height="6")"), std::string::npos);
    EXPECT_NE(svg.find(R"(width="180" height="100")"), std::string::npos);
}

TEST(Svg, Deterministic) {
    for (const auto& name : topoknit::testing::valid_fixtures())
        EXPECT_EQ(render_svg(evaluate_graph(fixture(name))), render_svg(evaluate_graph(fixture(name)))) << name;
}

TEST(Dot, SingleKnitGolden) {
    EXPECT_EQ(render_dot(evaluate_graph(fixture("single_knit"))),
              "digraph topology {\n"
              "  n_0_0 [kind=\"KnitACN\", i=0, j=0, shape=circle];\n"
              "  n_0_1 [kind=\"PCN\", i=0, j=1, shape=circle];\n"
              "  n_1_1 [kind=\"PCN\", i=1, j=1, shape=circle];\n"
              "  n_1_0 [kind=\"KnitACN\", i=1, j=0, shape=circle];\n"
              "  n_0_0 -> n_0_1 [row=0, yarn_dir=\"LeftToRight\", kind=\"Segment\", color=\"#ff00ff\"];\n"
              "  n_0_1 -> n_1_1 [row=0, yarn_dir=\"LeftToRight\", kind=\"Segment\", color=\"#ff00ff\"];\n"
              "  n_1_1 -> n_1_0 [row=0, yarn_dir=\"LeftToRight\", kind=\"Segment\", color=\"#ff00ff\"];\n"
              "}\n");
}

TEST(Dot, MarkersGetTheirOwnIds) {
    const std::string dot = render_dot(evaluate_graph(fixture("transfer_block")));
    EXPECT_NE(dot.find("u_5_3 [kind=\"UACNMarker\", i=5, j=3, shape=square];"), std::string::npos);
    EXPECT_NE(dot.find("n_5_3 [kind=\"KnitACN\""), std::string::npos);
    EXPECT_NE(dot.find("kind=\"BorderLoop\""), std::string::npos);
}
