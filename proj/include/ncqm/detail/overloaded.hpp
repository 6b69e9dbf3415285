#pragma once

namespace ncqm::detail {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

}  // namespace ncqm::detail
