#include <doctest.h>

#include "support.hpp"

using namespace tarzan;
using namespace tarzan::testing;

namespace {

const char* kTwoClocks =
    "automaton A;\n"
    "clock x max 2; clock y max 2;\n"
    "location q initial;\n";

const char* kFourClocks =
    "automaton A;\n"
    "clock x max 5; clock y max 5; clock z max 5; clock w max 5;\n"
    "location q initial;\n";

}  // namespace

TEST_CASE("initial region puts every clock at zero in the unit set") {
    const TimedAutomaton fl = gen_flower(4);
    const Region r = initial_region(fl);
    CHECK(r.unit == ClockSet{0, 1, 2, 3, 4});
    CHECK(r.h == std::vector<int>(5, 0));
    CHECK(r.ell() == 0);
    CHECK(r.r() == 0);
    CHECK(classify(r) == RegionClass::Z);
    CHECK(render_region(r, NameTable::of(fl)) ==
          "{q0, h(x1)=0 h(x2)=0 h(x3)=0 h(x4)=0 h(y)=0, X0={x1,x2,x3,x4,y}}");

    const Region single = initial_region(clocks_only({3}));
    CHECK(single.unit == ClockSet{0});

    CHECK_THROWS(initial_region(as_network(fl), {fl.find_location("Goal")}));
}

TEST_CASE("classes") {
    const Network four = net_of(kFourClocks);
    CHECK(classify(region_of("{q, h(x)=2 h(y)=2 h(z)=5 h(w)=5, X-2={w} X-1={z} X0={} X1={x,y}}", four)) ==
          RegionClass::P);
    const Network two = net_of(kTwoClocks);
    CHECK(classify(region_of("{q, h(x)=2 h(y)=2, X-2={x} X-1={y} X0={}}", two)) == RegionClass::U);
    CHECK(classify(region_of("{q, h(x)=1 h(y)=2, X-1={y} X0={x}}", two)) == RegionClass::Z);
    CHECK(classify(region_of("{q, h(x)=1 h(y)=0, X0={x} X1={y}}", two)) == RegionClass::M);
    CHECK(std::string(class_name(RegionClass::M)) == "M");
}

TEST_CASE("canonical keys") {
    const Network four = net_of(kFourClocks);
    const Region a = region_of("{q, h(x)=2 h(y)=2 h(z)=5 h(w)=5, X-2={w} X-1={z} X0={} X1={x,y}}", four);
    Region b = a;
    b.frac[0] = {1, 0};
    CHECK(canonical_key(a) == canonical_key(canonicalized(b)));
    CHECK(canonical_key(b) == canonical_key(a));

    Region swapped = a;
    std::swap(swapped.unbounded[0], swapped.unbounded[1]);
    CHECK(canonical_key(a) != canonical_key(swapped));

    const Network two = net_of(kTwoClocks);
    const Region r1 = region_of("{q, h(x)=2 h(y)=2, X-1={y} X0={x}}", two);
    const Region r3 = region_of("{q, h(x)=1 h(y)=2, X-1={y} X0={x}}", two);
    CHECK(canonical_key(r1) != canonical_key(r3));
}

TEST_CASE("canonicalize drops empty sets and sorts") {
    Region r;
    r.loc = {0};
    r.h = {0, 0, 0};
    r.unit = {2};
    r.frac = {{}, {1, 0}, {}};
    r.unbounded = {{}};
    canonicalize(r);
    CHECK(r.frac == std::vector<ClockSet>{{0, 1}});
    CHECK(r.unbounded.empty());
    CHECK(canonical_key(r) == canonical_key(canonicalized(r)));
}

TEST_CASE("valid_region catches malformed partitions") {
    const std::vector<int> cm{2, 2};
    std::string why;
    Region r;
    r.loc = {0};
    r.h = {2, 1};
    r.frac = {{0}};
    r.unit = {1};
    CHECK_FALSE(valid_region(r, cm, &why));
    CHECK_FALSE(why.empty());

    r.h = {1, 1};
    CHECK(valid_region(r, cm));

    Region missing = r;
    missing.unit.clear();
    CHECK_FALSE(valid_region(missing, cm));

    Region unb = r;
    unb.frac.clear();
    unb.unbounded = {{0}};
    CHECK_FALSE(valid_region(unb, cm));
    unb.h[0] = 2;
    CHECK(valid_region(unb, cm));
}

TEST_CASE("rendering round trips through the region parser") {
    const Network four = net_of(kFourClocks);
    const std::string text = "{q, h(x)=2 h(y)=2 h(z)=5 h(w)=5, X-2={w} X-1={z} X0={} X1={x,y}}";
    const Region r = region_of(text, four);
    CHECK(show(r, four) == text);

    const Network net = gen_ring(2);
    const Region init = initial_states(net).front().region;
    const std::string rendered = show(init, net);
    CHECK(rendered.rfind("{<P1.q0,P2.q0>", 0) == 0);
    CHECK(parse_region(rendered, net) == init);
}

TEST_CASE("clock status queries") {
    const Network two = net_of(kTwoClocks);
    const Region r = region_of("{q, h(x)=0 h(y)=2, X-1={y} X0={x}}", two);
    CHECK(clock_status(r, 0) == ClockStatus::unit);
    CHECK(clock_status(r, 1) == ClockStatus::unbounded);
    CHECK(exactly_zero(r, 0));
    CHECK_FALSE(exactly_zero(r, 1));
}
