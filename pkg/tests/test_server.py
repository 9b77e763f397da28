"""Tests for the permutope MCP server.

These tests validate tool registration and that every tool answers with
JSON, including structured errors for bad input.
"""

import asyncio
import json

import pytest

from permutope.server import get_tool_schemas, mcp, search_tool_schemas


def _text(result):
    """Text of the first content block; call_tool returns either blocks or (blocks, structured)."""
    if isinstance(result, tuple):
        result = result[0]
    return result[0].text


@pytest.fixture
def run_tool():
    """Helper to call an MCP tool and return parsed JSON."""

    async def _call(name, args=None):
        result = await mcp.call_tool(name, args or {})
        return json.loads(_text(result))

    def _sync_call(name, args=None):
        return asyncio.run(_call(name, args))

    return _sync_call


class TestToolRegistration:
    """All tools should be registered with correct names and schemas."""

    def test_tools_registered(self):
        tools = asyncio.run(mcp.list_tools())
        names = {t.name for t in tools}
        expected = {
            "get_limits",
            "orbits",
            "partition_stabilizer",
            "subgroups",
            "barycenter",
            "affine_dimension",
            "face_test",
            "face_subgroups",
            "verify_theorem",
        }
        assert expected == names

    def test_all_tools_have_descriptions(self):
        tools = asyncio.run(mcp.list_tools())
        for tool in tools:
            assert tool.description, f"{tool.name} has no description"

    def test_face_test_has_params(self):
        tools = asyncio.run(mcp.list_tools())
        tool = next(t for t in tools if t.name == "face_test")
        props = tool.inputSchema["properties"]
        assert "group" in props
        assert "subgroup" in props
        assert "method" in props

    def test_partition_stabilizer_has_params(self):
        tools = asyncio.run(mcp.list_tools())
        tool = next(t for t in tools if t.name == "partition_stabilizer")
        props = tool.inputSchema["properties"]
        assert "group" in props
        assert "partition" in props

    def test_schemas_match_registration(self):
        tools = asyncio.run(mcp.list_tools())
        assert {s["name"] for s in get_tool_schemas()} == {t.name for t in tools}

    def test_search_schemas(self):
        names = {s["name"] for s in search_tool_schemas("BARYCENTER")}
        assert "barycenter" in names
        assert search_tool_schemas("no-such-tool-anywhere") == []


class TestTools:

    def test_get_limits(self, run_tool):
        data = run_tool("get_limits")
        assert {"closure_cap", "subgroup_cap", "lp_vertex_cap", "workers", "debug"} <= set(data)

    def test_orbits(self, run_tool):
        data = run_tool("orbits", {"group": "C4"})
        assert data["orbit_partition"] == [[1, 2, 3, 4]]

    def test_partition_stabilizer(self, run_tool):
        data = run_tool("partition_stabilizer", {"group": "S4", "partition": "1,2|3,4"})
        assert data["stabilizer_order"] == 4

    def test_barycenter(self, run_tool):
        data = run_tool("barycenter", {"group": "C3"})
        assert data["barycenter"] == [["1/3"] * 3] * 3

    def test_affine_dimension(self, run_tool):
        assert run_tool("affine_dimension", {"group": "C5"})["affine_dimension"] == 4

    def test_face_test(self, run_tool):
        data = run_tool("face_test", {"group": "S3", "subgroup": "(1 2)"})
        assert data["combinatorial"] is True
        assert data["geometric"] is True
        assert data["agreement"] is True

    def test_face_subgroups(self, run_tool):
        data = run_tool("face_subgroups", {"group": "S3"})
        assert data["face_subgroup_count"] == 5

    def test_verify_theorem(self, run_tool):
        data = run_tool("verify_theorem", {"group": "S3"})
        assert data["subgroup_count"] == 6
        assert data["face_subgroup_count"] == 5
        assert data["agreement"] is True


class TestErrors:
    """Failures come back as structured error JSON."""

    def test_bad_group(self, run_tool):
        data = run_tool("orbits", {"group": "Q8"})
        assert data["error"] == "ParseError"
        assert "Q8" in data["message"]

    def test_degree_mismatch(self, run_tool):
        data = run_tool("face_test", {"group": "S3", "subgroup": "S4"})
        assert data["error"] == "DegreeMismatchError"

    def test_not_a_subgroup(self, run_tool):
        data = run_tool("face_test", {"group": "C4", "subgroup": "(1 2)"})
        assert data["error"] == "NotASubgroupError"

    def test_cap(self, run_tool):
        data = run_tool("subgroups", {"group": "S6"})
        assert data["error"] == "CapExceededError"
