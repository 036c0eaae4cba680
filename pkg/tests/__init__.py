"""Tests for AI Writing Automation"""
