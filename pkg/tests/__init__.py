"""
Service, CLI and integration tests for the MECS toolkit
"""
