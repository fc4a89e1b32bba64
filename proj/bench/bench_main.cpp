// Parallel kernels against their serial references.
#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "asciistego/canvas.hpp"
#include "asciistego/stego.hpp"
#include "asciistego/tamper.hpp"

using namespace asciistego;

namespace {

GrayImage gradient(std::size_t w, std::size_t h) {
  GrayImage img{w, h, 255, std::vector<std::uint8_t>(w * h)};
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) img.pixels[y * w + x] = static_cast<std::uint8_t>((x * 7 + y * 13) ^ (x * y));
  }
  return img;
}

void BM_ImageToAscii(benchmark::State& state) {
  GrayImage img = gradient(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0)) * 3 / 4);
  for (auto _ : state) benchmark::DoNotOptimize(image_to_ascii(img, 400));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(img.pixels.size()));
}

void BM_ImageToAsciiSerial(benchmark::State& state) {
  GrayImage img = gradient(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0)) * 3 / 4);
  for (auto _ : state) benchmark::DoNotOptimize(image_to_ascii_serial(img, 400));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(img.pixels.size()));
}

EmbedResult embed_fixture(const crypto::MasterKey& key) {
  Canvas art = Canvas::from_rows(std::vector<std::string>(80, std::string(200, '.')));
  SegmentMap m;
  m.segments.push_back({200 * 10, 200 * 14, "#87ceeb", 1});
  return embed(art, m, key, "bench", std::vector<std::uint8_t>(200, 0x41));
}

struct Fixture {
  crypto::MasterKey key = crypto::MasterKey::from_bytes(std::vector<std::uint8_t>(32, 0x5c));
  EmbedResult embedded = embed_fixture(key);
  const Canvas& stego = embedded.stego;
  const Manifest& manifest = embedded.manifest;
};

const Fixture& fixture() {
  static const Fixture f;
  return f;
}

void BM_TamperSim(benchmark::State& state) {
  const Fixture& f = fixture();
  for (auto _ : state) {
    benchmark::DoNotOptimize(tamper_sim(f.stego, f.manifest, f.key, TamperKind::Segment,
                                        static_cast<std::size_t>(state.range(0)), 42));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_TamperSimSerial(benchmark::State& state) {
  const Fixture& f = fixture();
  for (auto _ : state) {
    benchmark::DoNotOptimize(tamper_sim_serial(f.stego, f.manifest, f.key, TamperKind::Segment,
                                               static_cast<std::size_t>(state.range(0)), 42));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_ImageToAscii)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ImageToAsciiSerial)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TamperSim)->Arg(256)->Arg(2048)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TamperSimSerial)->Arg(256)->Arg(2048)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
