#pragma once

#include <string_view>
#include <vector>

namespace namecalc::detail {

struct EmbeddedFile {
  std::string_view path;
  std::string_view content;
};

const std::vector<EmbeddedFile>& embedded_corpus();

}  // namespace namecalc::detail
