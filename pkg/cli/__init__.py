"""Командная строка scalesym"""
