#pragma once

#include <actpres/builtins.hpp>
#include <actpres/cayley.hpp>
#include <actpres/coxeter.hpp>
#include <actpres/derive.hpp>
#include <actpres/enumerated_group.hpp>
#include <actpres/golden.hpp>
#include <actpres/graph.hpp>
#include <actpres/graph_canon.hpp>
#include <actpres/group_table.hpp>
#include <actpres/json_io.hpp>
#include <actpres/kozsul_model.hpp>
#include <actpres/milnor.hpp>
#include <actpres/perm.hpp>
#include <actpres/presentation.hpp>
#include <actpres/registry.hpp>
#include <actpres/relations.hpp>
#include <actpres/scaffolding.hpp>
#include <actpres/smith.hpp>
#include <actpres/todd_coxeter.hpp>
#include <actpres/truncated.hpp>
