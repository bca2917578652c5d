#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "ctv/io.hpp"

using namespace ctv;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::Precondition;
}

const char* kSquare = R"({
  "format": "colorful-tverberg-instance",
  "version": 1,
  "d": 2,
  "k": 0,
  "collections": [
    {"r": 2, "points": [[0, 0], ["1", "0"], ["2/2", 1], [0, "3/3"]], "classes": [[0], [1], [2], [3]]}
  ]
})";

}  // namespace

TEST_CASE("instances round-trip byte-identically after canonicalization") {
  const auto inst = io::parse_instance(kSquare);
  CHECK_NOTHROW(inst.check());
  CHECK(inst.collections[0].points[2] == Vector{Rational(1), Rational(1)});
  const auto text = io::emit_instance(inst);
  CHECK(io::emit_instance(io::parse_instance(text)) == text);

  RandomOptions jitter;
  jitter.jitter_den = 11;
  const auto random = random_instance(2, 1, {2, 2}, {}, 8, jitter);
  const auto rtext = io::emit_instance(random);
  const auto back = io::parse_instance(rtext);
  CHECK(back.collections[1].points == random.collections[1].points);
  CHECK(back.collections[1].classes == random.collections[1].classes);
  CHECK(io::emit_instance(back) == rtext);
}

TEST_CASE("malformed inputs are parse errors") {
  std::string bad = kSquare;
  bad.replace(bad.find("\"2/2\""), 5, "\"1/0\"");
  CHECK(kind_of([&] { io::parse_instance(bad); }) == ErrorKind::Parse);
  CHECK(kind_of([] { io::parse_instance("{not json"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { io::parse_instance(R"({"format":"colorful-tverberg-instance","version":2})"); }) ==
        ErrorKind::Parse);
  CHECK(kind_of([] { io::parse_instance(R"({"format":"colorful-tverberg-instance","version":1,"d":2})"); }) ==
        ErrorKind::Parse);
  std::string floaty = kSquare;
  floaty.replace(floaty.find("[0, 0]"), 6, "[0.5, 0]");
  CHECK(kind_of([&] { io::parse_instance(floaty); }) == ErrorKind::Parse);
  CHECK(kind_of([] { io::parse_certificate(R"({"format":"colorful-tverberg-certificate","version":1,"kind":"x"})"); }) ==
        ErrorKind::Parse);
}

TEST_CASE("certificates round-trip and re-verify") {
  const auto inst = io::parse_instance(kSquare);
  const auto t = solve_tverberg(inst.collections[0], 2);
  REQUIRE(t);
  const auto text = io::emit_certificate(*t);
  const auto parsed = io::parse_certificate(text);
  REQUIRE(parsed.tverberg);
  CHECK(io::verify_certificate(inst, parsed));
  CHECK(io::emit_certificate(parsed) == text);

  const auto line = random_instance(2, 1, {2, 2}, {}, 5);
  const auto cert = solve_hyperplane_transversal_exact(line);
  REQUIRE(cert);
  const auto ctext = io::emit_certificate(*cert);
  const auto cparsed = io::parse_certificate(ctext);
  REQUIRE(cparsed.transversal);
  CHECK(io::verify_certificate(line, cparsed));
  CHECK(io::emit_certificate(cparsed) == ctext);
  CHECK_FALSE(io::verify_certificate(inst, cparsed));
  CHECK_FALSE(io::verify_certificate(line, parsed));
}

TEST_CASE("SVG output is deterministic and drawn only for the plane") {
  const auto line = random_instance(2, 1, {2, 2}, {}, 5);
  const auto cert = solve_hyperplane_transversal_exact(line);
  REQUIRE(cert);
  io::Certificate c;
  c.transversal = *cert;
  const auto a = io::render_svg(line, &c);
  const auto b = io::render_svg(line, &c);
  CHECK(a == b);
  CHECK(a.rfind("<?xml", 0) == 0);
  CHECK(a.find("</svg>") != std::string::npos);
  CHECK(a.find("stroke=\"black\" stroke-width=\"1.5\"") != std::string::npos);

  const auto bare = io::render_svg(tightness_instance(2, 0, {3}, 0));
  CHECK(bare.find("<polygon") == std::string::npos);
  CHECK(kind_of([] { io::render_svg(random_instance(3, 0, {2}, {}, 1)); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("atomic writes replace the target") {
  const auto dir = std::filesystem::temp_directory_path() / "ctv-io-test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "out.json").string();
  io::write_file_atomic(path, "first");
  io::write_file_atomic(path, "second");
  CHECK(io::read_file(path) == "second");
  std::size_t entries = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++entries;
  CHECK(entries == 1);
  std::filesystem::remove_all(dir);
}

TEST_CASE("sweep reports carry per-trial seeds") {
  SweepParams params;
  params.d = 2;
  params.k = 0;
  params.r = {3};
  const auto rep = sweep(params, 3, 12, 1);
  const auto text = io::emit_sweep_report(rep);
  for (const auto& t : rep.trials) CHECK(text.find("\"seed\": " + std::to_string(t.seed)) != std::string::npos);
  CHECK(text.find("within the proven range") != std::string::npos);
}
