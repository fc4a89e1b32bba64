// asciistego: hide encrypted data in ASCII art and get it back.
//
// Exit codes: 0 success / Clean / colors ok, 1 usage, I/O or crypto error,
// 2 DecorativeModified, 3 SignificantlyModified, 4 SegmentTampered,
// 5 color mismatch.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "asciistego/canvas.hpp"
#include "asciistego/chroma.hpp"
#include "asciistego/cryptobox.hpp"
#include "asciistego/error.hpp"
#include "asciistego/hex.hpp"
#include "asciistego/stego.hpp"
#include "asciistego/tamper.hpp"

namespace fs = std::filesystem;
using namespace asciistego;

namespace {

constexpr int kExitError = 1;
constexpr int kExitColorMismatch = 5;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open " + path);
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(Errc::Io, "cannot read " + path);
  return data;
}

void write_file(const std::string& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::Io, "cannot create " + path);
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw Error(Errc::Io, "cannot write " + path);
}

template <std::size_t N>
std::array<std::uint8_t, N> parse_fixed_hex(const std::string& text, const char* what) {
  auto bytes = from_hex(text);
  if (!bytes || bytes->size() != N) {
    throw Error(Errc::Io, std::string(what) + " must be " + std::to_string(2 * N) + " hex digits");
  }
  std::array<std::uint8_t, N> out{};
  std::copy(bytes->begin(), bytes->end(), out.begin());
  return out;
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Clean: return 0;
    case Verdict::DecorativeModified: return 2;
    case Verdict::SignificantlyModified: return 3;
    case Verdict::SegmentTampered: return 4;
  }
  return kExitError;
}

Canvas load_canvas(const std::string& path) { return parse_canvas(read_file(path)); }
Manifest load_manifest(const std::string& path) { return manifest_read(read_file(path)); }
crypto::MasterKey load_key(const std::string& path) { return crypto::MasterKey::from_key_file(read_file(path)); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hide encrypted data inside ASCII art and recover it with an offline manifest"};
  app.require_subcommand(1);
  int status = 0;

  // keygen
  std::string key_out;
  auto* keygen = app.add_subcommand("keygen", "Write a fresh 32-byte master key as hex");
  keygen->add_option("--out", key_out, "Key file to write")->required();
  keygen->callback([&] {
    write_file(key_out, crypto::MasterKey::generate().to_key_file());
    fs::permissions(key_out, fs::perms::owner_read | fs::perms::owner_write, fs::perm_options::replace);
  });

  // artify
  std::string art_input, art_out, ramp(kDefaultRamp);
  std::size_t art_width = 0;
  double aspect = kDefaultAspect;
  auto* artify = app.add_subcommand("artify", "Convert a PGM image to ASCII art");
  artify->add_option("--input", art_input, "PGM (P2 or P5) image")->required();
  artify->add_option("--width", art_width, "Output columns")->required()->check(CLI::PositiveNumber);
  artify->add_option("--ramp", ramp, "Characters from lightest to densest")->capture_default_str();
  artify->add_option("--aspect", aspect, "Character aspect correction")->capture_default_str();
  artify->add_option("--out", art_out, "Canvas file to write")->required();
  artify->callback([&] {
    std::string pgm = read_file(art_input);
    Canvas c = image_to_ascii(std::span(reinterpret_cast<const std::uint8_t*>(pgm.data()), pgm.size()), art_width,
                              ramp, aspect);
    write_file(art_out, serialize_canvas(c) + "\n");
  });

  // embed
  std::string emb_art, emb_map, emb_key, emb_label, emb_payload, emb_salt, emb_nonce, emb_canvas, emb_manifest;
  auto* embed_cmd = app.add_subcommand("embed", "Encrypt a payload into the segments of an ASCII canvas");
  embed_cmd->add_option("--art", emb_art, "Input canvas")->required();
  embed_cmd->add_option("--map", emb_map, "Segment map JSON")->required();
  embed_cmd->add_option("--key", emb_key, "Master key file")->required();
  embed_cmd->add_option("--label", emb_label, "Dataset label")->required();
  embed_cmd->add_option("--payload", emb_payload, "Payload file")->required();
  embed_cmd->add_option("--salt", emb_salt, "Fixed 16-byte salt (hex), for reproducible output");
  embed_cmd->add_option("--nonce", emb_nonce, "Fixed 12-byte nonce (hex), for reproducible output");
  embed_cmd->add_option("--out-canvas", emb_canvas, "Stego canvas to write")->required();
  embed_cmd->add_option("--out-manifest", emb_manifest, "Manifest JSON to write")->required();
  embed_cmd->callback([&] {
    Canvas art = load_canvas(emb_art);
    SegmentMap map = read_segment_map(read_file(emb_map));
    crypto::MasterKey mk = load_key(emb_key);
    std::string payload = read_file(emb_payload);
    EmbedOptions opts;
    if (!emb_salt.empty()) opts.salt = parse_fixed_hex<crypto::kSaltSize>(emb_salt, "--salt");
    if (!emb_nonce.empty()) opts.nonce = parse_fixed_hex<crypto::kNonceSize>(emb_nonce, "--nonce");
    EmbedResult r = embed(art, map, mk, emb_label,
                          std::span(reinterpret_cast<const std::uint8_t*>(payload.data()), payload.size()), opts);
    write_file(emb_canvas, serialize_canvas(r.stego) + "\n");
    write_file(emb_manifest, manifest_write(r.manifest));
  });

  // extract
  std::string ext_canvas, ext_manifest, ext_key, ext_out;
  bool ext_strict = false;
  auto* extract_cmd = app.add_subcommand("extract", "Recover the payload from a stego canvas");
  extract_cmd->add_option("--canvas", ext_canvas, "Stego canvas")->required();
  extract_cmd->add_option("--manifest", ext_manifest, "Manifest JSON")->required();
  extract_cmd->add_option("--key", ext_key, "Master key file")->required();
  extract_cmd->add_flag("--strict", ext_strict, "Refuse unless the canvas is untouched");
  extract_cmd->add_option("--out", ext_out, "Payload file to write")->required();
  extract_cmd->callback([&] {
    ExtractOptions opts;
    opts.strict = ext_strict;
    ExtractResult r = extract(load_canvas(ext_canvas), load_manifest(ext_manifest), load_key(ext_key), opts);
    write_file(ext_out, std::string_view(reinterpret_cast<const char*>(r.plaintext.data()), r.plaintext.size()));
    if (r.report.verdict != Verdict::Clean) {
      std::fprintf(stderr, "warning: canvas integrity %s (%.3f of rows changed)\n",
                   std::string(verdict_name(r.report.verdict)).c_str(), r.report.modified_row_ratio);
    }
  });

  // verify
  std::string ver_canvas, ver_manifest;
  double ver_threshold = kDefaultRowThreshold;
  auto* verify_cmd = app.add_subcommand("verify", "Check a stego canvas against its manifest");
  verify_cmd->add_option("--canvas", ver_canvas, "Stego canvas")->required();
  verify_cmd->add_option("--manifest", ver_manifest, "Manifest JSON")->required();
  verify_cmd->add_option("--threshold", ver_threshold, "Changed-row fraction still counted as decorative")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  verify_cmd->callback([&] {
    IntegrityReport r = verify(load_canvas(ver_canvas), load_manifest(ver_manifest), ver_threshold);
    std::printf("%s %.3f\n", std::string(verdict_name(r.verdict)).c_str(), r.modified_row_ratio);
    if (!r.mismatched_segments.empty()) {
      std::printf("mismatched segments:");
      for (auto seq : r.mismatched_segments) std::printf(" %llu", static_cast<unsigned long long>(seq));
      std::printf("\n");
    }
    status = exit_code(r.verdict);
  });

  // render
  std::string ren_canvas, ren_manifest, ren_format, ren_out;
  auto* render = app.add_subcommand("render", "Render a canvas with its segment colors");
  render->add_option("--canvas", ren_canvas, "Canvas file")->required();
  render->add_option("--manifest", ren_manifest, "Manifest JSON")->required();
  render->add_option("--format", ren_format, "ansi or html")->required()->check(CLI::IsMember({"ansi", "html"}));
  render->add_option("--out", ren_out, "Rendered output")->required();
  render->callback([&] {
    Canvas c = load_canvas(ren_canvas);
    Manifest man = load_manifest(ren_manifest);
    if (c.width() != man.width || c.height() != man.height) {
      throw Error(Errc::DimensionMismatch, "canvas dimensions differ from the manifest");
    }
    std::string text = ren_format == "ansi" ? chroma::render_ansi(c, man.segments) : chroma::render_html(c, man.segments);
    write_file(ren_out, text + "\n");
  });

  // check-colors
  std::string cc_rendered, cc_manifest;
  auto* check = app.add_subcommand("check-colors", "Check an ANSI rendering against the manifest colors");
  check->add_option("--rendered", cc_rendered, "ANSI rendering")->required();
  check->add_option("--manifest", cc_manifest, "Manifest JSON")->required();
  check->callback([&] {
    chroma::ColoredCanvas cc = chroma::parse_ansi(read_file(cc_rendered));
    Manifest man = load_manifest(cc_manifest);
    if (cc.canvas.width() != man.width || cc.canvas.height() != man.height) {
      throw Error(Errc::DimensionMismatch, "rendered canvas dimensions differ from the manifest");
    }
    auto mismatches = chroma::check_colors(cc, man.segments);
    if (mismatches.empty()) {
      std::printf("colors ok\n");
      return;
    }
    std::printf("%zu color mismatches\n", mismatches.size());
    for (const auto& m : mismatches) {
      std::printf("%zu expected %s found %s\n", m.index, chroma::describe(m.expected).c_str(),
                  chroma::describe(m.found).c_str());
    }
    status = kExitColorMismatch;
  });

  // tamper-sim
  std::string ts_canvas, ts_manifest, ts_key, ts_kind, ts_out;
  std::size_t ts_trials = 0;
  std::uint64_t ts_seed = 0;
  auto* tamper = app.add_subcommand("tamper-sim", "Measure tamper detection with seeded random perturbations");
  tamper->add_option("--canvas", ts_canvas, "Stego canvas")->required();
  tamper->add_option("--manifest", ts_manifest, "Manifest JSON")->required();
  tamper->add_option("--key", ts_key, "Master key file")->required();
  tamper->add_option("--kind", ts_kind, "segment, decorative or color")
      ->required()
      ->check(CLI::IsMember({"segment", "decorative", "color"}));
  tamper->add_option("--trials", ts_trials, "Number of trials")->required()->check(CLI::PositiveNumber);
  tamper->add_option("--seed", ts_seed, "Generator seed")->required();
  tamper->add_option("--out", ts_out, "Write the JSON report here instead of stdout");
  tamper->callback([&] {
    TamperReport r = tamper_sim(load_canvas(ts_canvas), load_manifest(ts_manifest), load_key(ts_key),
                                *parse_tamper_kind(ts_kind), ts_trials, ts_seed);
    std::string json = tamper_report_json(r);
    if (ts_out.empty()) {
      std::fwrite(json.data(), 1, json.size(), stdout);
    } else {
      write_file(ts_out, json);
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "asciistego: %s\n", e.what());
    return kExitError;
  } catch (const Error& e) {
    std::fprintf(stderr, "asciistego: %s: %s\n", std::string(errc_name(e.code())).c_str(), e.what());
    return kExitError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "asciistego: %s\n", e.what());
    return kExitError;
  }
  return status;
}
