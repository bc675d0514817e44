#include <doctest.h>

#include <filesystem>

#include "wavederiv/errors.hpp"
#include "wavederiv/io.hpp"
#include "wavederiv/signals.hpp"
#include "wavederiv/wavelet.hpp"

using namespace wavederiv;

TEST_SUITE("io") {
  TEST_CASE("signal csv round trip") {
    const auto s = sample_noisy(Model::Chirp, default_grid(Model::Chirp), {0.3, 2, 1});
    const std::string csv = signal_csv(s);
    CHECK(csv.starts_with("x,f\n0,"));
    const auto back = parse_signal_csv(csv);
    CHECK(back.size() == s.size());
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(back[i] == s[i]);
    CHECK(back.grid().x0 == 0.0);
    CHECK(back.grid().dx == doctest::Approx(0.001).epsilon(1e-12));
    CHECK(signal_csv(s, "g").starts_with("x,g\n"));
  }

  TEST_CASE("malformed signal files") {
    CHECK_THROWS_AS(parse_signal_csv("x,f\n0,1\n"), SizeError);
    CHECK_THROWS_AS(parse_signal_csv("x,f\n0,1\n1,2\n3,3\n"), SpecError);
    CHECK_THROWS_AS(parse_signal_csv("x,f\n0,1\n1\n"), SpecError);
    CHECK_THROWS_AS(parse_signal_csv("x,f\n0,1\n1,zz\n"), SpecError);
    CHECK_THROWS_AS(parse_signal_csv("x,f\n1,1\n0,2\n"), SpecError);
    CHECK(parse_signal_csv("x,f\r\n0,1\r\n0.5,2\r\n\r\n").size() == 2);
  }

  TEST_CASE("plane csv") {
    const SampledSignal s(Grid(0.0, 0.01, 50), std::vector<double>(50, 0.0));
    const ScaleGrid scales(0.05, 0.1, 1);
    const auto plane = analyze(s, morlet_pair().chi, scales);
    const std::string csv = plane_csv(plane);
    CHECK(csv.starts_with("scale,0,0.01,"));
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
    CHECK(csv.find("\n0.10000000000000001,0,0,") != std::string::npos);
  }

  TEST_CASE("atomic write") {
    const auto dir = std::filesystem::temp_directory_path() / "wavederiv_io_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "out.txt";
    write_file_atomic(path, "hello\n");
    CHECK(read_file(path) == "hello\n");
    write_file_atomic(path, "again\n");
    CHECK(read_file(path) == "again\n");
    CHECK_FALSE(std::filesystem::exists(dir / "out.txt.tmp"));
    CHECK_THROWS_AS(write_file_atomic(dir / "missing" / "x.txt", "x"), Error);
    CHECK_THROWS_AS(read_file(dir / "absent.txt"), Error);
    std::filesystem::remove_all(dir);
  }
}
