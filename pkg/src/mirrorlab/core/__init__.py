"""핵심 기능 패키지"""
