"""Test pipeline module"""
