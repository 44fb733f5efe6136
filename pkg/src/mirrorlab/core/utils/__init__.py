"""유틸리티 함수 패키지"""
