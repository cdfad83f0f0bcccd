#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "lscat/io.hpp"

namespace fixtures {

inline const char* const kSo5Space = R"(# SO(5)
space SO5file
dim 10
stably-parallelizable true
generator b1 1
generator b3 3
truncate b1 8   # b1^8 = 0
truncate b3 2
known-cat 8 "computed"
)";

inline const char* const kX14Space = R"(space X14
dim 14
stably-parallelizable true
)";

inline const char* const kCollapseMap = R"(map collapse
domain S_2
range T2
degree +1
send t1 -> a1
send t2 -> b1
)";

struct Malformed {
    std::string name;
    std::string text;
    lscat::ParseError::Kind kind;
};

inline std::vector<Malformed> malformed_spaces() {
    using K = lscat::ParseError::Kind;
    return {
        {"missing dim", "space A\ngenerator x 1\ntruncate x 2\n", K::missing_field},
        {"zero truncation", "space A\ndim 1\ngenerator b1 1\ntruncate b1 0\n", K::invalid_value},
        {"duplicate generator", "space A\ndim 2\ngenerator x 1\ngenerator x 1\ntruncate x 3\n", K::duplicate},
        {"unknown keyword", "space A\ndim 0\nhomology 3\n", K::syntax},
        {"generator without truncate", "space A\ndim 1\ngenerator x 1\n", K::missing_field},
        {"truncate unknown generator", "space A\ndim 1\ngenerator x 1\ntruncate x 2\ntruncate y 2\n", K::unknown_name},
        {"mixed blocks", "space A\ndim 1\ngenerator x 1\ntruncate x 2\nbasis one 0\n", K::conflict},
        {"unknown product label", "space A\ndim 1\nbasis one 0\nbasis x 1\nproduct x y = one\n", K::unknown_name},
        {"non-associative table",
         "space A\ndim 4\nbasis one 0\nbasis x 1\nbasis y 2\nbasis z 3\nbasis u 4\n"
         "product x x = y\nproduct x y = z\nproduct x z = u\n",
         K::invalid_ring},
        {"dangling plus", "space A\ndim 2\nbasis one 0\nbasis x 1\nbasis w 2\nproduct x x = w +\n", K::syntax},
    };
}

/// A file removed when the object goes out of scope.
class TempFile {
  public:
    TempFile(const std::string& stem, const std::string& text) {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("lscat_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + "_" + stem);
        std::ofstream(path_) << text;
    }
    ~TempFile() {
        std::error_code ec;
        std::filesystem::remove(path_, ec);
    }
    TempFile(const TempFile&) = delete;
    TempFile& operator=(const TempFile&) = delete;
    std::string path() const { return path_.string(); }

  private:
    std::filesystem::path path_;
};

}  // namespace fixtures
