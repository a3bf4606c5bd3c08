#include "socialchoice/fixtures.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace socialchoice {

const std::map<std::string, std::string>& fixture_texts() {
  static const std::map<std::string, std::string> texts = {
      {"P1",
       "1: a>b>c>d>e\n"
       "1: b>c>d>e>a\n"
       "1: e>d>a>c>b\n"},
      {"P2",
       "1: b>c>d>e>a\n"
       "1: e>a>b>c>d\n"},
      {"P3",
       "1: a>b>c>d\n"
       "2: b>c>d>a\n"
       "2: d>c>a>b\n"},
      {"P4",
       "1: a>b>c>d\n"
       "1: b>c>d>a\n"},
      {"P5",
       "2: a>b>c\n"
       "1: b>a>c\n"
       "1: c>a>b\n"},
      {"E1a",
       "2: a>b>c\n"
       "1: b>c>a\n"},
      {"E1b",
       "1: a>c>d>b\n"
       "1: b>a>c>d\n"
       "1: c>d>b>a\n"},
      {"E2",
       "1: a>b>c\n"
       "1: b>c>a\n"},
      {"E3",
       "4/11: a>b>c\n"
       "2/11: b>a>c\n"
       "3/11: b>c>a\n"
       "2/11: c>a>b\n"},
  };
  return texts;
}

Profile fixture(const std::string& name) {
  auto it = fixture_texts().find(name);
  if (it == fixture_texts().end()) {
    throw std::invalid_argument("unknown fixture: '" + name + "'");
  }
  return parse_profile(it->second);
}

std::vector<std::string> emit_fixtures(const std::string& directory) {
  std::filesystem::create_directories(directory);
  std::vector<std::string> written;
  for (const auto& [name, text] : fixture_texts()) {
    std::filesystem::path path = std::filesystem::path(directory) / (name + ".ballots");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << text;
    written.push_back(path.string());
  }
  return written;
}

}  // namespace socialchoice
