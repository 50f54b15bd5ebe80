#!/usr/bin/env python3
"""
Test Suite
Unit tests for the algebra, linear algebra and system layers, plus CLI runs on the fixtures.
"""
