#pragma once

#include "nakit/samples.hpp"

namespace nakit {
namespace fixtures = samples;
}
