#ifndef QUASITOP_QUASITOP_HPP
#define QUASITOP_QUASITOP_HPP

#include "bits.hpp"
#include "ground.hpp"
#include "json_io.hpp"
#include "order.hpp"
#include "props.hpp"
#include "report.hpp"
#include "theorems.hpp"
#include "topo.hpp"

#endif
