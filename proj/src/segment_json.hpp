#pragma once

// Shared JSON plumbing for map and manifest files.

#include <initializer_list>
#include <string>
#include <string_view>

#include "asciistego/segment_map.hpp"
#include "json.hpp"

namespace asciistego::detail {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] inline void bad_manifest(const std::string& field) {
  throw Error(Errc::BadManifest, "bad manifest: " + field);
}

// Object holding exactly `keys`, any order. `what` names it in errors.
void expect_keys(const ordered_json& obj, std::initializer_list<std::string_view> keys, const std::string& what);
std::uint64_t get_uint(const ordered_json& obj, const char* key, const std::string& what);
std::string get_string(const ordered_json& obj, const char* key, const std::string& what);

ordered_json segments_to_json(const SegmentMap& m);
SegmentMap segments_from_json(const ordered_json& arr);

}  // namespace asciistego::detail
