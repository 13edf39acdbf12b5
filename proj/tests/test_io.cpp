#include <doctest.h>

#include "sunada/error.hpp"
#include "sunada/io.hpp"

using namespace sunada;

namespace {

std::string data(const std::string& name) { return read_file(std::string(SUNADA_DATA_DIR) + "/" + name); }

}  // namespace

TEST_CASE("shipped group files load") {
  const std::pair<const char*, std::size_t> orders[] = {{"gassmann.grp", 720}, {"gerst.grp", 32},
                                                        {"brooks-tse.grp", 168}, {"barden-kang.grp", 96},
                                                        {"guralnick3.grp", 243}, {"s4-cyclic-klein.grp", 24},
                                                        {"s3-transpositions.grp", 6}, {"klein-pair.grp", 4}};
  for (auto [file, order] : orders) {
    auto spec = parse_group_spec(data(file));
    CHECK(spec.group->order() == order);
    auto t = spec.triple();
    auto named = catalog::by_name(std::string(file).substr(0, std::string(file).size() - 4));
    CHECK(t.h1.order() == named.h1.order());
    CHECK(t.h2.order() == named.h2.order());
  }
}

TEST_CASE("group spec round trip and errors") {
  auto spec = parse_group_spec("# comment\ndegree 4\n(0 1)\n(0 1 2 3)  # shift\nsubgroup a:\n(0 1)(2 3)\nsubgroup b:\n(0 2)\n");
  CHECK(spec.group->order() == 24);
  CHECK(spec.subgroup("a").order() == 2);
  auto t = spec.triple();
  auto text = write_group_spec(*spec.group, {{"h1", &t.h1}, {"h2", &t.h2}});
  auto again = parse_group_spec(text);
  CHECK(again.group->order() == 24);
  CHECK(again.subgroup("h2").order() == 2);
  CHECK_THROWS_AS(parse_group_spec("degree 3\n(0 3)\n"), Error);
  CHECK_THROWS_AS(parse_group_spec("(0 1)\n"), Error);
  CHECK_THROWS_AS(parse_group_spec("degree x\n(0 1)\n"), Error);
  CHECK_THROWS_AS(parse_group_spec("degree 4\n(0 1)\nsubgroup h1:\n(0 1 2)\n"), Error);
  CHECK_THROWS_AS(parse_group_spec("degree 3\n(0 1)\nsubgroup h1\n"), Error);
  CHECK_THROWS_AS(spec.subgroup("missing"), Error);
}

TEST_CASE("voltage graph files") {
  auto spec = parse_group_spec(data("s3-transpositions.grp"));
  auto x = parse_voltage_graph(data("s3-theta.vg"), *spec.group);
  CHECK(x.vertices() == 2);
  CHECK(x.edges().size() == 3);
  CHECK(x.edges()[0].voltage == 0);
  CHECK(x.cover_connected());
  auto y = parse_voltage_graph(write_voltage_graph(x), *spec.group);
  CHECK(write_voltage_graph(y) == write_voltage_graph(x));
  CHECK_THROWS_AS(parse_voltage_graph("vertices 2\nedge 0 2 ()\n", *spec.group), Error);
  CHECK_THROWS_AS(parse_voltage_graph("vertices 1\nloop 0 0 (0 1)\n", *spec.group), Error);
  CHECK_THROWS_AS(parse_voltage_graph("vertices 1\nedge 0 0\n", *spec.group), Error);
  CHECK_THROWS_AS(parse_voltage_graph("vertices 2\nedge 0 0 (0 1)\n", *spec.group), Error);  // disconnected base
}

TEST_CASE("module files") {
  auto sw = parse_group_spec(data("seifert-weber.grp"));
  auto m = parse_gmodule(data("seifert-weber.mod"), *sw.group);
  CHECK(m.ell() == 5);
  CHECK(m.dim() == 3);
  CHECK(m.trace(sw.group->generator_indices()[0]) == 4);
  auto again = parse_gmodule(write_gmodule(m), *sw.group);
  CHECK(write_gmodule(again) == write_gmodule(m));
  auto s3 = parse_group_spec(data("s3-transpositions.grp"));
  auto sign = parse_gmodule(data("s3-sign.mod"), *s3.group);
  CHECK(sign.field_name() == "Q");
  CHECK_THROWS_AS(parse_gmodule("field F4\ndim 1\n1\n1\n", *s3.group), Error);
  CHECK_THROWS_AS(parse_gmodule("field Q\ndim 1\n1\n", *s3.group), Error);
  CHECK_THROWS_AS(parse_gmodule("field Q\ndim 1\n1\n-1\n", *s3.group), Error);
  CHECK_THROWS_AS(parse_gmodule("dim 1\n1\n1\n", *s3.group), Error);
}
