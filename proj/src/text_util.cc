#include "text_util.h"

#include <fstream>
#include <sstream>

#include "basislex/error.h"

namespace basislex::detail {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path);
  return ss.str();
}

}  // namespace basislex::detail
